#include "lzkit/divergence.hpp"

#include <cmath>
#include <set>

#include "lzkit/errors.hpp"
#include "lzkit/parsing.hpp"

namespace lzkit {

double lz_divergence(const Sequence& x, const Sequence& y) {
  if (x.empty()) throw InputError("lz_divergence: x must be nonempty");
  if (y.empty()) throw InputError("lz_divergence: y must be nonempty");
  if (!(x.alphabet() == y.alphabet()))
    throw InputError("lz_divergence: alphabet mismatch");

  const double n = static_cast<double>(x.size());
  const double c_cross = static_cast<double>(cross_parse(x, y).count);
  const double c_self = static_cast<double>(incremental_parse(x).c);
  return (c_cross * std::log2(n) - c_self * std::log2(c_self)) / n;
}

ClassificationResult classify(const Sequence& x, const LabeledCorpus& corpus) {
  if (corpus.classes.empty()) throw InputError("classify: empty corpus");

  std::set<std::string> labels;
  for (const auto& entry : corpus.classes) {
    if (!labels.insert(entry.label).second)
      throw InputError("classify: duplicate label '" + entry.label + "'");
    if (entry.training.empty())
      throw InputError("classify: empty training sequence for '" +
                       entry.label + "'");
  }

  ClassificationResult result;
  std::size_t best = 0;
  for (std::size_t i = 0; i < corpus.classes.size(); ++i) {
    const auto& entry = corpus.classes[i];
    const double score = lz_divergence(x, entry.training);
    result.scores.emplace_back(entry.label, score);
    if (score < result.scores[best].second) best = i;
  }
  result.label = result.scores[best].first;
  return result;
}

}  // namespace lzkit

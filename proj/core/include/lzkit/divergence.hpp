#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lzkit/sequence.hpp"

namespace lzkit {

/// Labeled training sequences for nearest-divergence classification.
/// Labels must be unique and every training sequence nonempty over a shared
/// alphabet; classify validates this.
struct LabeledCorpus {
  struct Entry {
    std::string label;
    Sequence training;
  };
  std::vector<Entry> classes;
};

struct ClassificationResult {
  std::string label;
  /// Divergence score per class, in corpus order.
  std::vector<std::pair<std::string, double>> scores;
};

/// LZ divergence (c(x<-y) * log2 n - c(x) * log2 c(x)) / n with n = len(x).
/// Unclamped: negative values are meaningful and reported as-is.
/// Throws InputError on empty inputs or mismatched alphabets.
double lz_divergence(const Sequence& x, const Sequence& y);

/// Label of the training sequence with the smallest lz_divergence(x, .);
/// ties break toward the earlier corpus entry. The full score map is
/// returned for auditing.
ClassificationResult classify(const Sequence& x, const LabeledCorpus& corpus);

}  // namespace lzkit

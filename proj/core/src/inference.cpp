#include "lzkit/inference.hpp"

#include <cmath>

#include "lzkit/errors.hpp"
#include "lzkit/parsing.hpp"

namespace lzkit {

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw InputError("lambda must lie strictly between 0 and 1");
}

}  // namespace

EmpiricalModel build_empirical_model(const Sequence& x, std::uint32_t k) {
  const std::size_t n = x.size();
  if (k >= n) throw InputError("model order must be below sequence length");

  EmpiricalModel model;
  model.order = k;
  model.total_positions = n - k;

  std::vector<Symbol> context(k);
  for (std::size_t i = k; i < n; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) context[j] = x[i - 1 - j];
    auto [it, inserted] = model.context_counts.try_emplace(
        context, std::vector<std::uint64_t>(x.alphabet().size(), 0));
    ++it->second[x[i]];
  }
  return model;
}

double empirical_entropy(const Sequence& x, std::uint32_t k) {
  const EmpiricalModel model = build_empirical_model(x, k);
  const double total = static_cast<double>(model.total_positions);

  double h = 0.0;
  for (const auto& [context, row] : model.context_counts) {
    std::uint64_t row_total = 0;
    for (std::uint64_t count : row) row_total += count;
    for (std::uint64_t count : row) {
      if (count == 0) continue;
      const double p = static_cast<double>(count) / total;
      h -= p * std::log2(static_cast<double>(count) /
                         static_cast<double>(row_total));
    }
  }
  return h;
}

TestVerdict test_fair_coin(const Sequence& x, double lambda) {
  check_lambda(lambda);
  if (x.alphabet().size() != 2)
    throw InputError("fair-coin test requires a binary alphabet");
  if (x.size() < 2) throw InputError("fair-coin test needs n >= 2");

  TestVerdict verdict;
  verdict.statistic = lz_complexity(x);
  verdict.lambda = lambda;
  verdict.decision = verdict.statistic >= 1.0 - lambda ? Hypothesis::kNull
                                                       : Hypothesis::kAlternative;
  return verdict;
}

TestVerdict test_memoryless(const Sequence& x, double lambda) {
  check_lambda(lambda);
  if (x.size() < 2) throw InputError("memoryless test needs n >= 2");

  TestVerdict verdict;
  verdict.statistic = empirical_entropy(x, 0) - lz_complexity(x);
  verdict.lambda = lambda;
  verdict.decision = verdict.statistic <= lambda ? Hypothesis::kNull
                                                 : Hypothesis::kAlternative;
  return verdict;
}

std::optional<std::uint32_t> estimate_markov_order(const Sequence& x,
                                                  double lambda,
                                                  std::uint32_t k_max) {
  check_lambda(lambda);
  if (k_max >= x.size())
    throw InputError("maximum order must be below sequence length");

  const double rho = lz_complexity(x);
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    if (empirical_entropy(x, k) - rho <= lambda) return k;
  }
  return std::nullopt;
}

}  // namespace lzkit

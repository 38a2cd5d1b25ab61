#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lzkit/sequence.hpp"

namespace lzkit {

/// Symbol counts under k-th order Markov modeling. Contexts are the k
/// preceding symbols, most recent first; positions 1..k carry no count, so
/// the counts sum to n - k.
struct EmpiricalModel {
  std::uint32_t order = 0;
  /// context -> per-symbol counts (row indexed by next symbol).
  std::map<std::vector<Symbol>, std::vector<std::uint64_t>> context_counts;
  std::uint64_t total_positions = 0;
};

enum class Hypothesis { kNull, kAlternative };

/// Outcome of a threshold test: the decision is a deterministic function of
/// the statistic against lambda.
struct TestVerdict {
  Hypothesis decision = Hypothesis::kNull;
  double statistic = 0.0;
  double lambda = 0.0;
};

/// Counts next-symbol occurrences for every k-context of x.
/// Throws InputError unless 0 <= k < n.
EmpiricalModel build_empirical_model(const Sequence& x, std::uint32_t k);

/// Plug-in conditional entropy H_k in bits per counted position:
/// -sum over (context z, symbol a) of (n(a,z)/(n-k)) * log2(n(a,z)/n(z)),
/// with zero counts contributing zero. Throws InputError unless k < n.
double empirical_entropy(const Sequence& x, std::uint32_t k);

/// Tests "x is a fair coin sequence": accept the null iff
/// lz_complexity(x) >= 1 - lambda. Binary alphabets only; 0 < lambda < 1;
/// n >= 2.
TestVerdict test_fair_coin(const Sequence& x, double lambda);

/// Tests "x is memoryless": accept the null iff
/// empirical_entropy(x, 0) - lz_complexity(x) <= lambda. The statistic is
/// that difference. 0 < lambda < 1; n >= 2.
TestVerdict test_memoryless(const Sequence& x, double lambda);

/// Smallest k in 0..k_max with empirical_entropy(x, k) - lz_complexity(x)
/// <= lambda; nullopt when no k qualifies. Throws InputError unless
/// 0 < lambda < 1 and k_max < n.
std::optional<std::uint32_t> estimate_markov_order(const Sequence& x,
                                                  double lambda,
                                                  std::uint32_t k_max);

}  // namespace lzkit

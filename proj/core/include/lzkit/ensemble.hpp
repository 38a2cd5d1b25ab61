#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lzkit/sequence.hpp"

namespace lzkit {

/// Default cap on the number of enumerated candidate sequences.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1ull << 20;

/// Exhaustive distribution over all length-n sequences, each weighted
/// 2^(-c log2 c) for its own incremental phrase count c. Sequences are
/// addressed by rank: position 0 is the most significant digit, so rank
/// order is lexicographic.
class UniversalDistribution {
 public:
  /// Enumerates all |A|^n sequences. Throws LimitError when |A|^n exceeds
  /// the budget.
  static UniversalDistribution build(std::uint32_t n, const Alphabet& alphabet,
                                     std::uint64_t budget =
                                         kDefaultEnumerationBudget);

  std::uint32_t n() const { return n_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::uint64_t size() const { return weights_.size(); }
  double z() const { return z_; }

  double weight(std::uint64_t rank) const { return weights_[rank]; }
  double probability(std::uint64_t rank) const { return weights_[rank] / z_; }

  std::uint64_t rank_of(const Sequence& x) const;
  Sequence sequence_at(std::uint64_t rank) const;

 private:
  UniversalDistribution(std::uint32_t n, Alphabet alphabet);

  std::uint32_t n_;
  Alphabet alphabet_;
  std::vector<double> weights_;
  double z_ = 0.0;
};

enum class Distortion { kHamming };

/// Membership test for {candidate : d(center, candidate) <= n * radius},
/// with a 1e-9 slack absorbing grid-point roundoff.
struct DistortionBall {
  Sequence center;
  double radius = 0.0;
  Distortion measure = Distortion::kHamming;

  bool contains(std::span<const Symbol> candidate) const;
};

/// Individual-sequence rate-distortion value
/// -log2( P{ d(x, candidate) <= n * D } ) / n under the universal
/// distribution, by full enumeration. Throws InputError when dist was built
/// for a different length or alphabet, or D is outside [0, 1].
double rd_point(const Sequence& x, double D, const UniversalDistribution& dist,
                Distortion measure = Distortion::kHamming);

}  // namespace lzkit

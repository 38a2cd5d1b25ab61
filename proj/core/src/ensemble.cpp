#include "lzkit/ensemble.hpp"

#include <cmath>

#include "lzkit/errors.hpp"
#include "lzkit/parsing.hpp"

namespace lzkit {

namespace {

/// Kahan compensated accumulator, so sums match to 1e-12 regardless of
/// partitioning.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void decode_rank(std::uint64_t rank, std::uint32_t n, std::uint32_t base,
                 std::vector<Symbol>& out) {
  out.resize(n);
  for (std::uint32_t i = n; i > 0; --i) {
    out[i - 1] = static_cast<Symbol>(rank % base);
    rank /= base;
  }
}

double phrase_weight(std::uint32_t c) {
  // 2^(-c log2 c) = c^(-c); c = 0 or 1 weighs 1.
  if (c <= 1) return 1.0;
  return std::pow(static_cast<double>(c), -static_cast<double>(c));
}

}  // namespace

UniversalDistribution::UniversalDistribution(std::uint32_t n, Alphabet alphabet)
    : n_(n), alphabet_(std::move(alphabet)) {}

UniversalDistribution UniversalDistribution::build(std::uint32_t n,
                                                   const Alphabet& alphabet,
                                                   std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    count *= alphabet.size();
    if (count > budget)
      throw LimitError("enumeration budget exceeded: |A|^n > " +
                       std::to_string(budget));
  }

  UniversalDistribution dist(n, alphabet);
  dist.weights_.reserve(count);
  KahanSum z;
  std::vector<Symbol> symbols;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    decode_rank(rank, n, alphabet.size(), symbols);
    const Sequence candidate(alphabet, symbols);
    const double w = phrase_weight(incremental_parse(candidate).c);
    dist.weights_.push_back(w);
    z.add(w);
  }
  dist.z_ = z.value();
  return dist;
}

std::uint64_t UniversalDistribution::rank_of(const Sequence& x) const {
  if (x.size() != n_ || x.alphabet().size() != alphabet_.size())
    throw InputError("rank_of: sequence does not match the distribution");
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    rank = rank * alphabet_.size() + x[i];
  return rank;
}

Sequence UniversalDistribution::sequence_at(std::uint64_t rank) const {
  if (rank >= weights_.size()) throw InputError("sequence_at: rank out of range");
  std::vector<Symbol> symbols;
  decode_rank(rank, n_, alphabet_.size(), symbols);
  return Sequence(alphabet_, std::move(symbols));
}

bool DistortionBall::contains(std::span<const Symbol> candidate) const {
  std::uint64_t distance = 0;
  switch (measure) {
    case Distortion::kHamming:
      for (std::size_t i = 0; i < candidate.size(); ++i)
        if (candidate[i] != center[i]) ++distance;
      break;
  }
  return static_cast<double>(distance) <=
         radius * static_cast<double>(center.size()) + 1e-9;
}

double rd_point(const Sequence& x, double D, const UniversalDistribution& dist,
                Distortion measure) {
  if (x.size() != dist.n() || x.alphabet().size() != dist.alphabet().size())
    throw InputError("rd_point: sequence does not match the distribution");
  if (D < 0.0 || D > 1.0)
    throw InputError("rd_point: distortion level must lie in [0, 1]");

  const DistortionBall ball{x, D, measure};
  KahanSum mass;
  std::vector<Symbol> candidate;
  for (std::uint64_t rank = 0; rank < dist.size(); ++rank) {
    decode_rank(rank, dist.n(), dist.alphabet().size(), candidate);
    if (ball.contains(candidate)) mass.add(dist.weight(rank));
  }
  return -std::log2(mass.value() / dist.z()) /
         static_cast<double>(x.size());
}

}  // namespace lzkit

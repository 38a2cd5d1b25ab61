#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>

namespace lzkit {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives the seed of an independent stream (trial, codebook, ...) from a
/// master seed. Fixed algorithm: results are identical on every platform.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  return splitmix64(s);
}

/// Seeded random source with fully specified sampling algorithms.
/// std::*_distribution is implementation-defined and deliberately avoided;
/// everything here is a fixed function of the mt19937_64 bit stream, so a
/// seed reproduces the same draws everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), bound >= 1. Masked rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const int width = std::bit_width(bound - 1);
    const std::uint64_t mask =
        width >= 64 ? ~0ULL : ((std::uint64_t{1} << width) - 1);
    for (;;) {
      std::uint64_t r = engine_() & mask;
      if (r < bound) return r;
    }
  }

  bool bernoulli(double p) { return next_double() < p; }

  /// Index drawn from a probability vector by CDF scan. Rows are expected to
  /// sum to 1; any residual mass lands on the last index.
  std::size_t categorical(std::span<const double> probs) {
    double u = next_double();
    double cdf = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
      cdf += probs[i];
      if (u < cdf) return i;
    }
    return probs.empty() ? 0 : probs.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lzkit

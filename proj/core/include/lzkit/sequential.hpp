#pragma once

#include <cstdint>
#include <vector>

#include "lzkit/parsing.hpp"
#include "lzkit/sequence.hpp"

namespace lzkit {

/// Online LZ-trie estimator over a binary alphabet. The trie grows exactly
/// as in incremental parsing; the cursor tracks the current phrase and the
/// child visit counts at the cursor give the conditional estimate.
class PredictorState {
 public:
  explicit PredictorState(double alpha);

  /// Smoothed estimate of P(next symbol = 1) at the cursor.
  double prob_of_one() const;

  /// Consumes one symbol: descends to the child (creating it at a phrase
  /// end, then resetting the cursor to the root).
  void advance(Symbol s);

  double alpha() const { return alpha_; }

 private:
  ParseTrie trie_;
  std::uint32_t cursor_;
  double alpha_;
};

enum class PredictionMode { kDeterministic, kRandomized };

struct PredictionReport {
  /// Estimated P(x_i = 1) before x_i was revealed, per position.
  std::vector<double> prob_one;
  std::vector<std::uint8_t> predictions;
  std::uint64_t errors = 0;
  double error_rate = 0.0;
};

/// Predicts each bit of x causally from the trie estimate. Deterministic
/// mode predicts 1 iff the estimate exceeds 1/2 (ties predict 0); randomized
/// mode draws the prediction Bernoulli(estimate) from the seed.
/// Throws InputError unless the alphabet is binary and alpha > 0.
PredictionReport predict_sequence(const Sequence& x, double alpha,
                                  PredictionMode mode, std::uint64_t seed = 0);

/// Even-odds proportional gambling from the same estimator: capital
/// multiplies by 2 * (estimate of the realized bit) each step. Returns the
/// per-symbol log2 capital growth, 1 + (1/n) * sum log2 p(x_i).
/// Throws InputError unless the alphabet is binary, alpha > 0, and n >= 1.
double gamble_sequence(const Sequence& x, double alpha);

}  // namespace lzkit

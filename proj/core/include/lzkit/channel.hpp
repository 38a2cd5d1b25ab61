#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lzkit/sequence.hpp"

namespace lzkit {

/// Unifilar finite-state channel: outputs are drawn from a per-(input,state)
/// distribution and the state advances deterministically through
/// next_state(input, output, state).
///
/// Table layouts (flattened, row-major):
///   emission[(x * num_states + z) * output_alphabet + y] = P(y | x, z)
///   next_state[(x * output_alphabet + y) * num_states + z] = following state
class FsChannel {
 public:
  FsChannel(std::uint32_t num_states, std::uint32_t initial_state,
            std::uint32_t input_alphabet, std::uint32_t output_alphabet,
            std::vector<double> emission, std::vector<std::uint32_t> next_state);

  /// One state, binary in/out, P(y != x) = crossover.
  static FsChannel binary_symmetric(double crossover);

  std::uint32_t num_states() const { return num_states_; }
  std::uint32_t initial_state() const { return initial_state_; }
  std::uint32_t input_alphabet() const { return input_alphabet_; }
  std::uint32_t output_alphabet() const { return output_alphabet_; }

  std::span<const double> emission_row(Symbol x, std::uint32_t z) const {
    return {&emission_[(static_cast<std::size_t>(x) * num_states_ + z) *
                       output_alphabet_],
            output_alphabet_};
  }

  std::uint32_t next_state(Symbol x, Symbol y, std::uint32_t z) const {
    return next_state_[(static_cast<std::size_t>(x) * output_alphabet_ + y) *
                           num_states_ +
                       z];
  }

 private:
  std::uint32_t num_states_;
  std::uint32_t initial_state_;
  std::uint32_t input_alphabet_;
  std::uint32_t output_alphabet_;
  std::vector<double> emission_;
  std::vector<std::uint32_t> next_state_;
};

/// M codewords of common length n, sampled i.i.d. uniform per symbol.
struct Codebook {
  std::vector<Sequence> words;
  std::uint64_t seed = 0;

  static Codebook uniform(std::uint32_t M, std::uint32_t n,
                          const Alphabet& alphabet, std::uint64_t seed);
};

/// Monte-Carlo comparison of the maximum-likelihood and the universal
/// (parsing-based) decoder. Rates carry 95% binomial confidence radii.
struct ExperimentReport {
  std::uint32_t trials = 0;
  std::uint32_t ml_errors = 0;
  std::uint32_t ziv_errors = 0;
  double ml_rate = 0.0;
  double ziv_rate = 0.0;
  double ml_ci = 0.0;
  double ziv_ci = 0.0;
  std::uint64_t master_seed = 0;
  std::uint32_t n = 0;
  std::uint32_t M = 0;
  std::uint32_t num_states = 0;
};

/// Default cap on M * n symbols held by one experiment.
inline constexpr std::uint64_t kDefaultSymbolBudget = 1ull << 24;

/// Samples y_i ~ P(. | x_i, z_i), advancing the state after each symbol.
/// Deterministic given the seed. Throws InputError on alphabet mismatch.
Sequence transmit(const FsChannel& ch, const Sequence& x, std::uint64_t seed);

/// Sum of log2 P(y_i | x_i, z_i) along the state trajectory; -infinity when
/// any factor is zero. Throws InputError on length or alphabet mismatch.
double log_likelihood(const FsChannel& ch, const Sequence& x,
                      const Sequence& y);

/// Codeword index maximizing log_likelihood; ties go to the lowest index.
std::size_t ml_decode(const FsChannel& ch, const Codebook& book,
                      const Sequence& y);

/// Codeword index minimizing the joint-parsing metric u(codeword | y); ties
/// go to the lowest index. Needs no channel knowledge.
std::size_t ziv_decode(const Codebook& book, const Sequence& y);

/// Per trial: fresh uniform codebook, uniform message, one transmission,
/// both decoders. Per-trial seeds derive from the master seed and trial
/// index, so the report is independent of execution order.
/// Throws LimitError when M * n exceeds symbol_budget.
ExperimentReport run_experiment(const FsChannel& ch, std::uint32_t n,
                                std::uint32_t M, std::uint32_t trials,
                                std::uint64_t master_seed,
                                std::uint64_t symbol_budget =
                                    kDefaultSymbolBudget);

}  // namespace lzkit

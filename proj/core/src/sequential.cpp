#include "lzkit/sequential.hpp"

#include <cmath>

#include "lzkit/errors.hpp"
#include "lzkit/rng.hpp"

namespace lzkit {

namespace {

void check_binary(const Sequence& x) {
  if (x.alphabet().size() != 2)
    throw InputError("sequential estimator requires a binary alphabet");
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0)) throw InputError("smoothing alpha must be positive");
}

}  // namespace

PredictorState::PredictorState(double alpha) : cursor_(0), alpha_(alpha) {
  check_alpha(alpha);
  cursor_ = trie_.root();
}

double PredictorState::prob_of_one() const {
  const double zeros = static_cast<double>(trie_.child_visits(cursor_, 0));
  const double ones = static_cast<double>(trie_.child_visits(cursor_, 1));
  return (ones + alpha_) / (zeros + ones + 2.0 * alpha_);
}

void PredictorState::advance(Symbol s) {
  std::uint32_t next = trie_.child(cursor_, s);
  if (next != ParseTrie::kNoChild) {
    trie_.record_visit(next);
    cursor_ = next;
    return;
  }
  next = trie_.add_child(cursor_, s);
  trie_.record_visit(next);
  cursor_ = trie_.root();
}

PredictionReport predict_sequence(const Sequence& x, double alpha,
                                  PredictionMode mode, std::uint64_t seed) {
  check_binary(x);
  check_alpha(alpha);

  PredictorState state(alpha);
  Rng rng(seed);
  PredictionReport report;
  report.prob_one.reserve(x.size());
  report.predictions.reserve(x.size());

  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = state.prob_of_one();
    const bool guess = mode == PredictionMode::kDeterministic
                           ? p > 0.5
                           : rng.bernoulli(p);
    report.prob_one.push_back(p);
    report.predictions.push_back(guess ? 1 : 0);
    if (static_cast<Symbol>(guess) != x[i]) ++report.errors;
    state.advance(x[i]);
  }
  report.error_rate =
      x.empty() ? 0.0
                : static_cast<double>(report.errors) /
                      static_cast<double>(x.size());
  return report;
}

double gamble_sequence(const Sequence& x, double alpha) {
  check_binary(x);
  check_alpha(alpha);
  if (x.empty()) throw InputError("gamble_sequence: empty sequence");

  PredictorState state(alpha);
  double log_sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p_one = state.prob_of_one();
    log_sum += std::log2(x[i] == 1 ? p_one : 1.0 - p_one);
    state.advance(x[i]);
  }
  return 1.0 + log_sum / static_cast<double>(x.size());
}

}  // namespace lzkit

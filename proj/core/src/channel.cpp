#include "lzkit/channel.hpp"

#include <cmath>
#include <limits>

#include "lzkit/errors.hpp"
#include "lzkit/parsing.hpp"
#include "lzkit/rng.hpp"

namespace lzkit {

FsChannel::FsChannel(std::uint32_t num_states, std::uint32_t initial_state,
                     std::uint32_t input_alphabet,
                     std::uint32_t output_alphabet,
                     std::vector<double> emission,
                     std::vector<std::uint32_t> next_state)
    : num_states_(num_states),
      initial_state_(initial_state),
      input_alphabet_(input_alphabet),
      output_alphabet_(output_alphabet),
      emission_(std::move(emission)),
      next_state_(std::move(next_state)) {
  if (num_states_ == 0) throw InputError("channel needs at least one state");
  if (initial_state_ >= num_states_)
    throw InputError("initial state out of range");
  if (input_alphabet_ == 0 || output_alphabet_ == 0)
    throw InputError("channel alphabets must be nonempty");

  const std::size_t rows =
      static_cast<std::size_t>(input_alphabet_) * num_states_;
  if (emission_.size() != rows * output_alphabet_)
    throw InputError("emission table has the wrong shape");
  if (next_state_.size() !=
      static_cast<std::size_t>(input_alphabet_) * output_alphabet_ *
          num_states_)
    throw InputError("next-state table has the wrong shape");

  for (std::uint32_t z : next_state_) {
    if (z >= num_states_) throw InputError("next-state entry out of range");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::uint32_t y = 0; y < output_alphabet_; ++y) {
      const double p = emission_[r * output_alphabet_ + y];
      if (p < 0.0) throw InputError("negative emission probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw InputError("emission row does not sum to 1");
    for (std::uint32_t y = 0; y < output_alphabet_; ++y)
      emission_[r * output_alphabet_ + y] /= sum;
  }
}

FsChannel FsChannel::binary_symmetric(double crossover) {
  if (crossover < 0.0 || crossover > 1.0)
    throw InputError("crossover probability must lie in [0, 1]");
  return FsChannel(1, 0, 2, 2,
                   {1.0 - crossover, crossover, crossover, 1.0 - crossover},
                   {0, 0, 0, 0});
}

Codebook Codebook::uniform(std::uint32_t M, std::uint32_t n,
                           const Alphabet& alphabet, std::uint64_t seed) {
  Codebook book;
  book.seed = seed;
  book.words.reserve(M);
  Rng rng(seed);
  for (std::uint32_t m = 0; m < M; ++m) {
    std::vector<Symbol> symbols(n);
    for (std::uint32_t i = 0; i < n; ++i)
      symbols[i] = static_cast<Symbol>(rng.below(alphabet.size()));
    book.words.emplace_back(alphabet, std::move(symbols));
  }
  return book;
}

Sequence transmit(const FsChannel& ch, const Sequence& x, std::uint64_t seed) {
  if (x.alphabet().size() != ch.input_alphabet())
    throw InputError("transmit: input alphabet mismatch");

  Rng rng(seed);
  std::uint32_t z = ch.initial_state();
  std::vector<Symbol> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = static_cast<Symbol>(rng.categorical(ch.emission_row(x[i], z)));
    z = ch.next_state(x[i], y[i], z);
  }
  return Sequence(Alphabet(ch.output_alphabet()), std::move(y));
}

double log_likelihood(const FsChannel& ch, const Sequence& x,
                      const Sequence& y) {
  if (x.size() != y.size())
    throw InputError("log_likelihood: length mismatch");
  if (x.alphabet().size() != ch.input_alphabet() ||
      y.alphabet().size() != ch.output_alphabet())
    throw InputError("log_likelihood: alphabet mismatch");

  std::uint32_t z = ch.initial_state();
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = ch.emission_row(x[i], z)[y[i]];
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    total += std::log2(p);
    z = ch.next_state(x[i], y[i], z);
  }
  return total;
}

std::size_t ml_decode(const FsChannel& ch, const Codebook& book,
                      const Sequence& y) {
  if (book.words.empty()) throw InputError("ml_decode: empty codebook");
  std::size_t best = 0;
  double best_ll = log_likelihood(ch, book.words[0], y);
  for (std::size_t m = 1; m < book.words.size(); ++m) {
    const double ll = log_likelihood(ch, book.words[m], y);
    if (ll > best_ll) {
      best = m;
      best_ll = ll;
    }
  }
  return best;
}

std::size_t ziv_decode(const Codebook& book, const Sequence& y) {
  if (book.words.empty()) throw InputError("ziv_decode: empty codebook");
  std::size_t best = 0;
  double best_u = conditional_metric(book.words[0], y);
  for (std::size_t m = 1; m < book.words.size(); ++m) {
    const double u = conditional_metric(book.words[m], y);
    if (u < best_u) {
      best = m;
      best_u = u;
    }
  }
  return best;
}

ExperimentReport run_experiment(const FsChannel& ch, std::uint32_t n,
                                std::uint32_t M, std::uint32_t trials,
                                std::uint64_t master_seed,
                                std::uint64_t symbol_budget) {
  if (M < 2) throw InputError("experiment needs at least two codewords");
  if (trials < 1) throw InputError("experiment needs at least one trial");
  if (n < 1) throw InputError("experiment needs positive blocklength");
  if (static_cast<std::uint64_t>(M) * n > symbol_budget)
    throw LimitError("codebook budget exceeded: M * n > " +
                     std::to_string(symbol_budget));

  const Alphabet input(ch.input_alphabet());
  ExperimentReport report;
  report.trials = trials;
  report.master_seed = master_seed;
  report.n = n;
  report.M = M;
  report.num_states = ch.num_states();

  for (std::uint32_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(master_seed, t);
    const Codebook book =
        Codebook::uniform(M, n, input, derive_seed(trial_seed, 0));
    Rng message_rng(derive_seed(trial_seed, 1));
    const std::size_t sent = message_rng.below(M);
    const Sequence y =
        transmit(ch, book.words[sent], derive_seed(trial_seed, 2));
    if (ml_decode(ch, book, y) != sent) ++report.ml_errors;
    if (ziv_decode(book, y) != sent) ++report.ziv_errors;
  }

  const auto finish = [trials](std::uint32_t errors, double& rate, double& ci) {
    rate = static_cast<double>(errors) / trials;
    ci = 1.96 * std::sqrt(rate * (1.0 - rate) / trials);
  };
  finish(report.ml_errors, report.ml_rate, report.ml_ci);
  finish(report.ziv_errors, report.ziv_rate, report.ziv_ci);
  return report;
}

}  // namespace lzkit

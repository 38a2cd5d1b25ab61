#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "lzkit/divergence.hpp"
#include "lzkit/errors.hpp"
#include "lzkit/parsing.hpp"
#include "lzkit/sequence.hpp"
#include "support/generators.hpp"

using namespace lzkit;
using namespace lzkit::testsupport;

namespace {

Sequence repeat_bits(const std::string& word, std::size_t copies) {
  std::string text;
  text.reserve(word.size() * copies);
  for (std::size_t i = 0; i < copies; ++i) text += word;
  return Sequence::from_bits(text);
}

}  // namespace

TEST_SUITE("divergence") {

TEST_CASE("the worked 11-bit pair lands on the closed-form value") {
  const Sequence x = Sequence::from_bits("01111000110");
  const Sequence y = Sequence::from_bits("10010100110");
  const double expected =
      (3.0 * std::log2(11.0) - 6.0 * std::log2(6.0)) / 11.0;
  CHECK(lz_divergence(x, y) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(lz_divergence(x, y) < 0.0);
}

TEST_CASE("divergence of a sequence against itself uses one cross phrase") {
  const Sequence x = Sequence::from_bits("01111000110");
  const double n = static_cast<double>(x.size());
  const double expected = (std::log2(n) - 6.0 * std::log2(6.0)) / n;
  CHECK(lz_divergence(x, x) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("independent fair coins stay close to zero divergence") {
  const std::size_t n = 1u << 14;
  const Sequence x = bernoulli_sequence(n, 0.5, 11);
  const Sequence y = bernoulli_sequence(n, 0.5, 12);
  CHECK(std::abs(lz_divergence(x, y)) <= 0.3);
}

TEST_CASE("divergence separates opposite-biased sources") {
  const std::size_t n = 1u << 14;
  const Sequence x = bernoulli_sequence(n, 0.1, 21);
  const Sequence same = bernoulli_sequence(n, 0.1, 22);
  const Sequence other = bernoulli_sequence(n, 0.9, 23);
  CHECK(lz_divergence(x, same) < lz_divergence(x, other));
}

TEST_CASE("cross-parse count of repeated words does not grow with copies") {
  const std::string word = "10010110";
  const Sequence y = Sequence::from_bits(word);
  double prev = 1e9;
  for (std::size_t copies : {1u, 2u, 4u, 8u, 16u}) {
    const Sequence x = repeat_bits(word, copies);
    const double per_symbol =
        static_cast<double>(cross_parse(x, y).count) /
        static_cast<double>(x.size());
    CHECK(per_symbol <= prev + 1e-12);
    prev = per_symbol;
  }
}

TEST_CASE("divergence validates inputs") {
  const Sequence x = Sequence::from_bits("01");
  const Sequence empty(Alphabet::binary(), {});
  CHECK_THROWS_AS(lz_divergence(empty, x), InputError);
  CHECK_THROWS_AS(lz_divergence(x, empty), InputError);
  CHECK_THROWS_AS(lz_divergence(x, Sequence(Alphabet(3), {0, 1, 2})),
                  InputError);
  // Same-size alphabets are interchangeable: mappings are presentation.
  CHECK_NOTHROW(lz_divergence(x, Sequence(Alphabet(2), {0, 1})));
}

TEST_CASE("classifier returns per-class scores in corpus order") {
  LabeledCorpus corpus;
  corpus.classes.push_back({"heads", bernoulli_sequence(4096, 0.1, 31)});
  corpus.classes.push_back({"tails", bernoulli_sequence(4096, 0.9, 32)});
  const Sequence x = bernoulli_sequence(2048, 0.1, 33);

  const ClassificationResult result = classify(x, corpus);
  CHECK(result.label == "heads");
  REQUIRE(result.scores.size() == 2);
  CHECK(result.scores[0].first == "heads");
  CHECK(result.scores[1].first == "tails");
  CHECK(result.scores[0].second ==
        doctest::Approx(lz_divergence(x, corpus.classes[0].training)));
  CHECK(result.scores[1].second ==
        doctest::Approx(lz_divergence(x, corpus.classes[1].training)));
  CHECK(result.scores[0].second < result.scores[1].second);
}

TEST_CASE("biased-coin classification is nearly perfect") {
  LabeledCorpus corpus;
  corpus.classes.push_back({"p01", bernoulli_sequence(1u << 14, 0.1, 41)});
  corpus.classes.push_back({"p09", bernoulli_sequence(1u << 14, 0.9, 42)});

  std::uint32_t correct = 0;
  const std::uint32_t per_class = 100;
  for (std::uint32_t i = 0; i < per_class; ++i) {
    const Sequence a = bernoulli_sequence(2048, 0.1, 5000 + i);
    if (classify(a, corpus).label == "p01") ++correct;
    const Sequence b = bernoulli_sequence(2048, 0.9, 6000 + i);
    if (classify(b, corpus).label == "p09") ++correct;
  }
  CHECK(correct >= 190);
}

TEST_CASE("markov chains with distinct flip rates classify at 0.9 or better") {
  LabeledCorpus corpus;
  corpus.classes.push_back(
      {"sticky", markov_flip_sequence(1u << 15, 0.05, 71)});
  corpus.classes.push_back(
      {"jumpy", markov_flip_sequence(1u << 15, 0.45, 72)});

  std::uint32_t correct = 0;
  const std::uint32_t per_class = 100;
  for (std::uint32_t i = 0; i < per_class; ++i) {
    const Sequence a = markov_flip_sequence(4096, 0.05, 7000 + i);
    if (classify(a, corpus).label == "sticky") ++correct;
    const Sequence b = markov_flip_sequence(4096, 0.45, 8000 + i);
    if (classify(b, corpus).label == "jumpy") ++correct;
  }
  CHECK(correct >= 180);
}

TEST_CASE("class labels do not affect the winning training sequence") {
  LabeledCorpus first;
  first.classes.push_back({"a", markov_flip_sequence(8192, 0.05, 81)});
  first.classes.push_back({"b", markov_flip_sequence(8192, 0.45, 82)});
  LabeledCorpus second;
  second.classes.push_back({"x", first.classes[0].training});
  second.classes.push_back({"y", first.classes[1].training});

  const Sequence probe = markov_flip_sequence(2048, 0.05, 83);
  const ClassificationResult r1 = classify(probe, first);
  const ClassificationResult r2 = classify(probe, second);
  const std::size_t i1 = r1.label == "a" ? 0 : 1;
  const std::size_t i2 = r2.label == "x" ? 0 : 1;
  CHECK(i1 == i2);
  CHECK(r1.scores[0].second == r2.scores[0].second);
  CHECK(r1.scores[1].second == r2.scores[1].second);
}

TEST_CASE("score ties break toward the earlier class") {
  const Sequence shared = Sequence::from_bits("1001011");
  LabeledCorpus corpus;
  corpus.classes.push_back({"first", shared});
  corpus.classes.push_back({"second", shared});
  const ClassificationResult result =
      classify(Sequence::from_bits("0110"), corpus);
  CHECK(result.label == "first");
  CHECK(result.scores[0].second == result.scores[1].second);
}

TEST_CASE("classifier validates the corpus") {
  const Sequence x = Sequence::from_bits("01");
  CHECK_THROWS_AS(classify(x, LabeledCorpus{}), InputError);

  LabeledCorpus duplicate;
  duplicate.classes.push_back({"same", Sequence::from_bits("0")});
  duplicate.classes.push_back({"same", Sequence::from_bits("1")});
  CHECK_THROWS_AS(classify(x, duplicate), InputError);

  LabeledCorpus empty_training;
  empty_training.classes.push_back({"a", Sequence(Alphabet::binary(), {})});
  CHECK_THROWS_AS(classify(x, empty_training), InputError);
}

}  // TEST_SUITE

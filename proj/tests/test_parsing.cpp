#include <cmath>
#include <set>

#include <doctest.h>

#include "lzkit/errors.hpp"
#include "lzkit/parsing.hpp"
#include "lzkit/sequence.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace lzkit;
using namespace lzkit::testsupport;

namespace {

const char* kRepeatString = "repeatandrepeatandrepeatandrepeatandrepeat";

Sequence repeat_sequence() {
  return Sequence::from_text(Alphabet::from_symbols("abcdefghijklmnopqrstuvwxyz"),
                             kRepeatString);
}

void check_parse_invariants(const Sequence& x, const ParseResult& parse) {
  // Partition.
  std::uint32_t cursor = 0;
  for (const PhraseSpan& span : parse.boundaries) {
    CHECK(span.begin == cursor);
    CHECK(span.end > span.begin);
    cursor = span.end;
  }
  CHECK(cursor == x.size());
  CHECK(parse.c == parse.boundaries.size());

  // Distinctness of complete phrases; the final phrase duplicates one of
  // them exactly when flagged incomplete.
  const auto phrases = phrases_of(x, parse.boundaries);
  std::set<std::vector<Symbol>> complete;
  for (std::uint32_t i = 0; i < parse.complete_count(); ++i)
    CHECK(complete.insert(phrases[i]).second);
  if (parse.last_incomplete) CHECK(complete.count(phrases.back()) == 1);

  // Prefix links spell each phrase minus its newest symbol; the incomplete
  // final link spells the whole final phrase.
  for (std::uint32_t i = 0; i < parse.c; ++i) {
    const std::uint32_t link = parse.prefix_links[i];
    REQUIRE(link <= parse.complete_count());
    const bool incomplete_final = parse.last_incomplete && i + 1 == parse.c;
    std::vector<Symbol> expected = phrases[i];
    if (!incomplete_final) expected.pop_back();
    const std::vector<Symbol> linked =
        link == 0 ? std::vector<Symbol>{} : phrases[link - 1];
    CHECK(linked == expected);
  }

  // Concatenation oracle: the records alone rebuild x.
  std::vector<Symbol> rebuilt;
  for (std::uint32_t i = 0; i < parse.c; ++i) {
    const std::uint32_t link = parse.prefix_links[i];
    if (link != 0) {
      const PhraseSpan& prev = parse.boundaries[link - 1];
      rebuilt.insert(rebuilt.end(), x.symbols().begin() + prev.begin,
                     x.symbols().begin() + prev.end);
    }
    const bool incomplete_final = parse.last_incomplete && i + 1 == parse.c;
    if (!incomplete_final) rebuilt.push_back(x[parse.boundaries[i].end - 1]);
  }
  CHECK(rebuilt == x.symbols());
}

}  // namespace

TEST_SUITE("parsing") {

TEST_CASE("42-letter repeat string parses into the known 21 phrases") {
  const Sequence x = repeat_sequence();
  REQUIRE(x.size() == 42);
  const ParseResult parse = incremental_parse(x);
  CHECK(parse.c == 21);
  CHECK(parse.last_incomplete);
  const std::vector<std::string> expected = {
      "r",  "e",  "p",   "ea",  "t",   "a",    "n",  "d",    "re", "pe", "at",
      "an", "dr", "ep",  "eat", "and", "rep",  "eata", "nd", "repe", "at"};
  CHECK(phrase_strings(x, parse.boundaries) == expected);
  check_parse_invariants(x, parse);
}

TEST_CASE("counting sequence prefix parses into the binary strings in order") {
  const Sequence x =
      Sequence::from_bits("0100011011000001010011100101110111");
  REQUIRE(x.size() == 34);
  const ParseResult parse = incremental_parse(x);
  const std::vector<std::string> expected = {
      "0",   "1",   "00",  "01",  "10",  "11",  "000",
      "001", "010", "011", "100", "101", "110", "111"};
  CHECK(phrase_strings(x, parse.boundaries) == expected);
  CHECK_FALSE(parse.last_incomplete);
  CHECK(parse.c == 14);
}

TEST_CASE("empty input parses to zero phrases") {
  const Sequence x(Alphabet::binary(), {});
  const ParseResult parse = incremental_parse(x);
  CHECK(parse.c == 0);
  CHECK(parse.boundaries.empty());
  CHECK_FALSE(parse.last_incomplete);
}

TEST_CASE("aaaa parses into a, aa and a duplicate tail") {
  const Sequence x = Sequence::from_text(Alphabet::from_symbols("a"), "aaaa");
  const ParseResult parse = incremental_parse(x);
  CHECK(parse.c == 3);
  CHECK(parse.last_incomplete);
  const std::vector<std::string> expected = {"a", "aa", "a"};
  CHECK(phrase_strings(x, parse.boundaries) == expected);
}

TEST_CASE("parse matches the naive quadratic parser on random inputs") {
  std::uint64_t seed = 20260822;
  for (std::uint32_t alphabet_size : {1u, 2u, 3u, 5u, 256u}) {
    for (std::size_t n : {1u, 2u, 7u, 33u, 150u, 900u}) {
      const Sequence x = random_sequence(n, alphabet_size, ++seed);
      const ParseResult parse = incremental_parse(x);
      const NaiveParse naive = naive_incremental_parse(x);
      CHECK(phrases_of(x, parse.boundaries) == naive.phrases);
      CHECK(parse.last_incomplete == naive.last_incomplete);
      check_parse_invariants(x, parse);
    }
  }
}

TEST_CASE("complexity of the repeat string matches the phrase-count formula") {
  const Sequence x = repeat_sequence();
  CHECK(lz_complexity(x) ==
        doctest::Approx(21.0 * std::log2(21.0) / 42.0).epsilon(1e-12));
}

TEST_CASE("complexity of a single symbol is zero") {
  const Sequence x(Alphabet::binary(), {1});
  CHECK(lz_complexity(x) == 0.0);
}

TEST_CASE("complexity rejects empty input") {
  const Sequence x(Alphabet::binary(), {});
  CHECK_THROWS_AS(lz_complexity(x), InputError);
}

TEST_CASE("fair-coin complexity sits near one bit per symbol") {
  const Sequence x = bernoulli_sequence(1u << 16, 0.5, 42);
  const double rho = lz_complexity(x);
  CHECK(rho > 0.8);
  CHECK(rho < 1.2);
}

TEST_CASE("complexity per symbol does not grow with more repetitions") {
  std::string w8, w64;
  for (int k = 0; k < 64; ++k) {
    if (k < 8) w8 += "repeatand";
    w64 += "repeatand";
  }
  const Alphabet letters = Alphabet::from_symbols("abcdefghijklmnopqrstuvwxyz");
  const double rho8 = lz_complexity(Sequence::from_text(letters, w8));
  const double rho64 = lz_complexity(Sequence::from_text(letters, w64));
  CHECK(rho64 <= rho8);
}

TEST_CASE("complexity concentrates above the source entropy rate") {
  // h(0.2) bits per symbol for a flip-probability-0.2 chain.
  const double entropy = 0.7219280948873623;
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    sum += lz_complexity(markov_flip_sequence(1u << 16, 0.2, 1000 + seed));
  CHECK(sum / 20.0 > entropy - 0.05);
}

TEST_CASE("cross-parse reproduces the worked 11-bit example") {
  const Sequence x = Sequence::from_bits("01111000110");
  const Sequence y = Sequence::from_bits("10010100110");
  const CrossParseResult cross = cross_parse(x, y);
  CHECK(cross.count == 3);
  const std::vector<std::string> expected = {"011", "110", "00110"};
  CHECK(phrase_strings(x, cross.boundaries) == expected);

  // The same x parses into six phrases on its own.
  CHECK(incremental_parse(x).c == 6);
}

TEST_CASE("cross-parse of a sequence against itself is one phrase") {
  const Sequence x = Sequence::from_bits("01111000110");
  const CrossParseResult cross = cross_parse(x, x);
  CHECK(cross.count == 1);
  CHECK(cross.boundaries.front().length() == x.size());
}

TEST_CASE("cross-parse falls back to single symbols absent from y") {
  const Sequence x = Sequence::from_bits("111");
  const Sequence y = Sequence::from_bits("000");
  const CrossParseResult cross = cross_parse(x, y);
  CHECK(cross.count == 3);
  for (const PhraseSpan& span : cross.boundaries) CHECK(span.length() == 1);
}

TEST_CASE("cross-parse rejects empty y and mismatched alphabets") {
  const Sequence x = Sequence::from_bits("01");
  CHECK_THROWS_AS(cross_parse(x, Sequence(Alphabet::binary(), {})),
                  InputError);
  CHECK_THROWS_AS(cross_parse(x, Sequence(Alphabet(3), {0, 1, 2})),
                  InputError);
  // Byte mappings are presentation only: a mapped and an unmapped
  // alphabet of the same size are interchangeable for parsing.
  CHECK_NOTHROW(cross_parse(x, Sequence(Alphabet(2), {0, 1})));
}

TEST_CASE("cross-parse agrees with the naive oracle and is maximal") {
  std::uint64_t seed = 555;
  for (std::size_t nx : {1u, 5u, 24u, 80u}) {
    for (std::size_t ny : {1u, 6u, 31u, 77u}) {
      for (std::uint32_t alphabet_size : {2u, 3u}) {
        const Sequence x = random_sequence(nx, alphabet_size, ++seed);
        const Sequence y = random_sequence(ny, alphabet_size, ++seed);
        const CrossParseResult cross = cross_parse(x, y);
        CHECK(phrases_of(x, cross.boundaries) == naive_cross_parse(x, y));

        // Maximality: a matched phrase extended by one symbol never occurs
        // in y.
        for (const PhraseSpan& span : cross.boundaries) {
          if (span.end == x.size()) continue;
          const std::vector<Symbol> phrase(x.symbols().begin() + span.begin,
                                           x.symbols().begin() + span.end);
          if (!naive_contains(y.symbols(), phrase)) {
            CHECK(span.length() == 1);
            continue;
          }
          std::vector<Symbol> extended = phrase;
          extended.push_back(x[span.end]);
          CHECK_FALSE(naive_contains(y.symbols(), extended));
        }
      }
    }
  }
}

TEST_CASE("joint parse reproduces the worked six-symbol example") {
  const Sequence x = Sequence::from_bits("010001");
  const Sequence y = Sequence::from_bits("010101");
  const JointParseResult joint = joint_parse(x, y);
  CHECK(joint.c_joint == 4);
  CHECK(joint.c_y == 3);
  CHECK(joint.phrase_multiplicity == std::vector<std::uint32_t>{1, 1, 2});

  std::vector<std::uint32_t> lengths;
  for (const PhraseSpan& span : joint.joint_boundaries)
    lengths.push_back(span.length());
  CHECK(lengths == std::vector<std::uint32_t>{1, 1, 2, 2});

  CHECK(conditional_metric(x, y) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("joint parse of x with itself yields zero conditional metric") {
  // A completely parsed sequence pairs each joint phrase with a distinct
  // y-side phrase, so every multiplicity is one and the metric vanishes.
  const Sequence x =
      Sequence::from_bits("0100011011000001010011100101110111");
  const JointParseResult joint = joint_parse(x, x);
  for (std::uint32_t m : joint.phrase_multiplicity) CHECK(m == 1);
  CHECK(conditional_metric(x, x) == 0.0);
}

TEST_CASE("joint self-parse with an incomplete tail contributes two bits") {
  // When the final joint phrase duplicates an earlier one, its y-side
  // projection repeats as well: one multiplicity becomes two and the
  // metric is exactly 2 log2 2 = 2 bits regardless of length.
  const Sequence x = bernoulli_sequence(300, 0.5, 9);
  const JointParseResult joint = joint_parse(x, x);
  std::uint32_t twos = 0;
  for (std::uint32_t m : joint.phrase_multiplicity) {
    CHECK(m <= 2);
    if (m == 2) ++twos;
  }
  CHECK(twos <= 1);
  const double u = conditional_metric(x, x);
  CHECK((u == 0.0 || u == 2.0));
}

TEST_CASE("joint parse of 0000 against 0101 has three distinct y phrases") {
  const Sequence x = Sequence::from_bits("0000");
  const Sequence y = Sequence::from_bits("0101");
  const JointParseResult joint = joint_parse(x, y);
  CHECK(joint.c_joint == 3);
  CHECK(joint.c_y == 3);
  CHECK(joint.phrase_multiplicity == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("joint parse consistency on random pairs") {
  std::uint64_t seed = 77;
  for (std::size_t n : {1u, 9u, 64u, 300u}) {
    const Sequence x = random_sequence(n, 3, ++seed);
    const Sequence y = random_sequence(n, 2, ++seed);
    const JointParseResult joint = joint_parse(x, y);
    std::uint32_t total = 0;
    for (std::uint32_t m : joint.phrase_multiplicity) {
      CHECK(m >= 1);
      total += m;
    }
    CHECK(total == joint.c_joint);
    CHECK(joint.c_y <= joint.c_joint);
    CHECK(joint.c_y == joint.distinct_y_phrases.size());
  }
}

TEST_CASE("joint parse rejects mismatched lengths and empty input") {
  const Sequence x = Sequence::from_bits("01");
  const Sequence y = Sequence::from_bits("011");
  CHECK_THROWS_AS(joint_parse(x, y), InputError);
  CHECK_THROWS_AS(joint_parse(Sequence(Alphabet::binary(), {}),
                              Sequence(Alphabet::binary(), {})),
                  InputError);
}

TEST_CASE("conditioning on a constant keeps the metric near the own rate") {
  const std::size_t n = 4096;
  const Sequence x = bernoulli_sequence(n, 0.5, 1234);
  const Sequence y(Alphabet::binary(), std::vector<Symbol>(n, 0));
  const double per_symbol = conditional_metric(x, y) / static_cast<double>(n);
  CHECK(per_symbol >= 0.5);
}

}  // TEST_SUITE

#include "lzkit/parsing.hpp"

#include <cmath>
#include <cstdint>

#include "lzkit/errors.hpp"
#include "lzkit/substring_index.hpp"

namespace lzkit {

ParseResult incremental_parse(const Sequence& x) {
  ParseResult result;
  const std::size_t n = x.size();
  if (n == 0) return result;

  ParseTrie trie;
  std::uint32_t cur = trie.root();
  std::uint32_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol s = x[i];
    std::uint32_t next = trie.child(cur, s);
    if (next != ParseTrie::kNoChild) {
      trie.record_visit(next);
      cur = next;
      continue;
    }
    next = trie.add_child(cur, s);
    trie.record_visit(next);
    result.boundaries.push_back(
        {start, static_cast<std::uint32_t>(i + 1)});
    result.prefix_links.push_back(cur);
    cur = trie.root();
    start = static_cast<std::uint32_t>(i + 1);
  }
  if (start < n) {
    // Input ended mid-walk: the final phrase duplicates the phrase at `cur`.
    result.boundaries.push_back({start, static_cast<std::uint32_t>(n)});
    result.prefix_links.push_back(cur);
    result.last_incomplete = true;
  }
  result.c = static_cast<std::uint32_t>(result.boundaries.size());
  return result;
}

double lz_complexity(const Sequence& x) {
  if (x.empty()) throw InputError("lz_complexity: empty sequence");
  const double c = static_cast<double>(incremental_parse(x).c);
  return c * std::log2(c) / static_cast<double>(x.size());
}

CrossParseResult cross_parse(const Sequence& x, const Sequence& y) {
  if (y.empty()) throw InputError("cross_parse: y must be nonempty");
  if (!(x.alphabet() == y.alphabet()))
    throw InputError("cross_parse: alphabet mismatch");

  CrossParseResult result;
  const std::size_t n = x.size();
  if (n == 0) return result;

  SubstringIndex index(y);
  std::size_t i = 0;
  while (i < n) {
    std::int32_t state = index.initial();
    std::size_t len = 0;
    while (i + len < n) {
      std::int32_t next = index.step(state, x[i + len]);
      if (next == SubstringIndex::kNoState) break;
      state = next;
      ++len;
    }
    if (len == 0) len = 1; // symbol absent from y: emit it alone
    result.boundaries.push_back({static_cast<std::uint32_t>(i),
                                 static_cast<std::uint32_t>(i + len)});
    i += len;
  }
  result.count = static_cast<std::uint32_t>(result.boundaries.size());
  return result;
}

JointParseResult joint_parse(const Sequence& x, const Sequence& y) {
  if (x.size() != y.size())
    throw InputError("joint_parse: length mismatch");
  if (x.empty()) throw InputError("joint_parse: empty input");

  const std::uint64_t product = static_cast<std::uint64_t>(x.alphabet().size()) *
                                static_cast<std::uint64_t>(y.alphabet().size());
  if (product > Sequence::kMaxLength)
    throw InputError("joint_parse: product alphabet too large");

  const std::uint32_t y_size = y.alphabet().size();
  std::vector<Symbol> pairs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    pairs[i] = x[i] * y_size + y[i];
  const Sequence pair_seq(Alphabet(static_cast<std::uint32_t>(product)),
                          std::move(pairs));

  const ParseResult parse = incremental_parse(pair_seq);

  JointParseResult result;
  result.joint_boundaries = parse.boundaries;
  result.c_joint = parse.c;

  std::map<std::vector<Symbol>, std::uint32_t> seen; // y phrase -> index
  for (const PhraseSpan& span : parse.boundaries) {
    std::vector<Symbol> y_phrase(y.symbols().begin() + span.begin,
                                 y.symbols().begin() + span.end);
    auto [it, inserted] = seen.emplace(
        std::move(y_phrase),
        static_cast<std::uint32_t>(result.distinct_y_phrases.size()));
    if (inserted) {
      result.distinct_y_phrases.emplace_back(y.symbols().begin() + span.begin,
                                             y.symbols().begin() + span.end);
      result.phrase_multiplicity.push_back(0);
    }
    ++result.phrase_multiplicity[it->second];
  }
  result.c_y = static_cast<std::uint32_t>(result.distinct_y_phrases.size());
  return result;
}

double conditional_metric(const Sequence& x, const Sequence& y) {
  const JointParseResult joint = joint_parse(x, y);
  double u = 0.0;
  for (std::uint32_t count : joint.phrase_multiplicity) {
    const double c = static_cast<double>(count);
    u += c * std::log2(c);
  }
  return u;
}

}  // namespace lzkit

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lzkit/sequence.hpp"

namespace lzkit {

/// Phrase dictionary built by incremental parsing. Node 0 is the root (the
/// empty phrase); every other node id equals the phrase-id of the phrase its
/// root path spells, in creation order. `visits` counts how often the parse
/// walk stepped onto a node, which is what the sequential predictor reads.
///
/// Child lookup is an associative map per node, so byte alphabets (256) and
/// product alphabets (65536) cost memory proportional to edges actually seen.
class ParseTrie {
 public:
  static constexpr std::uint32_t kNoChild = 0xffffffffu;

  struct Node {
    std::map<Symbol, std::uint32_t> children;
    std::uint32_t parent = 0;
    Symbol symbol = 0;        // edge label from parent
    std::uint32_t length = 0; // depth == phrase length
    std::uint64_t visits = 0;
  };

  ParseTrie() : nodes_(1) {}

  std::uint32_t root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::uint32_t id) const { return nodes_[id]; }

  /// kNoChild if absent.
  std::uint32_t child(std::uint32_t id, Symbol s) const {
    const auto& ch = nodes_[id].children;
    auto it = ch.find(s);
    return it == ch.end() ? kNoChild : it->second;
  }

  std::uint64_t child_visits(std::uint32_t id, Symbol s) const {
    std::uint32_t c = child(id, s);
    return c == kNoChild ? 0 : nodes_[c].visits;
  }

  std::uint32_t add_child(std::uint32_t id, Symbol s) {
    std::uint32_t fresh = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{{}, id, s, nodes_[id].length + 1, 0});
    nodes_[id].children.emplace(s, fresh);
    return fresh;
  }

  void record_visit(std::uint32_t id) { ++nodes_[id].visits; }

 private:
  std::vector<Node> nodes_;
};

struct PhraseSpan {
  std::uint32_t begin = 0;
  std::uint32_t end = 0; // exclusive
  std::uint32_t length() const { return end - begin; }
  bool operator==(const PhraseSpan&) const = default;
};

/// Result of incremental (LZ78) parsing. Phrase ids are 1-based; 0 names the
/// empty phrase.
struct ParseResult {
  /// Contiguous, disjoint intervals covering [0, n).
  std::vector<PhraseSpan> boundaries;
  /// Per phrase: for a complete phrase, the id of its longest proper prefix
  /// phrase (0 = empty); for an incomplete final phrase, the id of the
  /// earlier phrase it duplicates. Either way, phrase i's content is the
  /// linked phrase's content plus (for complete phrases) one new symbol.
  std::vector<std::uint32_t> prefix_links;
  /// The final phrase duplicates an earlier phrase: input ended before a new
  /// symbol extended it.
  bool last_incomplete = false;
  /// Total phrase count, the final (possibly duplicate) phrase included.
  std::uint32_t c = 0;

  std::uint32_t complete_count() const { return c - (last_incomplete ? 1 : 0); }
};

struct CrossParseResult {
  std::vector<PhraseSpan> boundaries;
  std::uint32_t count = 0; // c(x <- y)
};

struct JointParseResult {
  /// Phrase partition of the aligned pair sequence.
  std::vector<PhraseSpan> joint_boundaries;
  /// Distinct y-side phrase strings, in first appearance order.
  std::vector<std::vector<Symbol>> distinct_y_phrases;
  std::uint32_t c_y = 0; // distinct_y_phrases.size()
  /// c_l[l] = number of joint phrases whose y-side equals distinct phrase l.
  std::vector<std::uint32_t> phrase_multiplicity;
  std::uint32_t c_joint = 0;
};

/// LZ78 incremental parsing: each phrase is the shortest prefix of the
/// remaining input that is not already a phrase; the final phrase may be an
/// incomplete duplicate. Empty input gives c = 0.
ParseResult incremental_parse(const Sequence& x);

/// c * log2(c) / n for c = incremental phrase count. Bits per symbol.
/// Throws InputError on empty input.
double lz_complexity(const Sequence& x);

/// Greedy decomposition of x into longest prefixes occurring anywhere in y
/// (overlaps allowed). A symbol of x absent from y becomes a length-1 phrase.
/// Throws InputError when y is empty or the alphabets differ.
CrossParseResult cross_parse(const Sequence& x, const Sequence& y);

/// Incremental parse of the aligned pair sequence ((x_1,y_1),...,(x_n,y_n))
/// over the product alphabet, with y-side phrase multiplicities.
/// Throws InputError when lengths differ or inputs are empty.
JointParseResult joint_parse(const Sequence& x, const Sequence& y);

/// Ziv's conditional metric u(x|y) = sum_l c_l * log2(c_l), in bits.
double conditional_metric(const Sequence& x, const Sequence& y);

}  // namespace lzkit

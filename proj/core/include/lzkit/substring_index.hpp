#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lzkit/sequence.hpp"

namespace lzkit {

/// Suffix automaton over one sequence: recognizes exactly its contiguous
/// substrings. Built in O(n log sigma); a walk from the initial state
/// answers longest-matching-prefix queries one symbol at a time.
class SubstringIndex {
 public:
  static constexpr std::int32_t kNoState = -1;

  explicit SubstringIndex(std::span<const Symbol> text);
  explicit SubstringIndex(const Sequence& text) : SubstringIndex(text.span()) {}

  std::int32_t initial() const { return 0; }

  /// Next state after reading `s`, or kNoState when no substring extends.
  std::int32_t step(std::int32_t state, Symbol s) const {
    const auto& next = states_[static_cast<std::size_t>(state)].next;
    auto it = next.find(s);
    return it == next.end() ? kNoState : it->second;
  }

  bool contains(std::span<const Symbol> pattern) const;

  /// Length of the longest prefix of `pattern` that is a substring.
  std::size_t longest_prefix_match(std::span<const Symbol> pattern) const;

 private:
  struct State {
    std::map<Symbol, std::int32_t> next;
    std::int32_t link = -1;
    std::int32_t len = 0;
  };

  void extend(Symbol s);

  std::vector<State> states_;
  std::int32_t last_ = 0;
};

}  // namespace lzkit

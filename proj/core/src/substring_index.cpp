#include "lzkit/substring_index.hpp"

namespace lzkit {

SubstringIndex::SubstringIndex(std::span<const Symbol> text) {
  states_.reserve(2 * text.size() + 1);
  states_.push_back(State{});
  for (Symbol s : text) extend(s);
}

void SubstringIndex::extend(Symbol s) {
  std::int32_t cur = static_cast<std::int32_t>(states_.size());
  states_.push_back(State{{}, -1, states_[last_].len + 1});
  std::int32_t p = last_;
  while (p != -1 && !states_[p].next.count(s)) {
    states_[p].next[s] = cur;
    p = states_[p].link;
  }
  if (p == -1) {
    states_[cur].link = 0;
  } else {
    std::int32_t q = states_[p].next[s];
    if (states_[p].len + 1 == states_[q].len) {
      states_[cur].link = q;
    } else {
      std::int32_t clone = static_cast<std::int32_t>(states_.size());
      states_.push_back(State{states_[q].next, states_[q].link,
                              states_[p].len + 1});
      while (p != -1 && states_[p].next[s] == q) {
        states_[p].next[s] = clone;
        p = states_[p].link;
      }
      states_[q].link = clone;
      states_[cur].link = clone;
    }
  }
  last_ = cur;
}

bool SubstringIndex::contains(std::span<const Symbol> pattern) const {
  return longest_prefix_match(pattern) == pattern.size();
}

std::size_t SubstringIndex::longest_prefix_match(
    std::span<const Symbol> pattern) const {
  std::int32_t state = initial();
  std::size_t matched = 0;
  for (Symbol s : pattern) {
    state = step(state, s);
    if (state == kNoState) break;
    ++matched;
  }
  return matched;
}

}  // namespace lzkit

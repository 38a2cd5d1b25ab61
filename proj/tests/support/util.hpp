#pragma once

#include <string>
#include <vector>

#include "lzkit/parsing.hpp"
#include "lzkit/sequence.hpp"

namespace lzkit::testsupport {

inline std::vector<std::vector<Symbol>> phrases_of(
    const Sequence& x, const std::vector<PhraseSpan>& spans) {
  std::vector<std::vector<Symbol>> out;
  out.reserve(spans.size());
  for (const PhraseSpan& span : spans)
    out.emplace_back(x.symbols().begin() + span.begin,
                     x.symbols().begin() + span.end);
  return out;
}

/// Phrases rendered through the alphabet's byte mapping, for readable
/// failure messages on text inputs.
inline std::vector<std::string> phrase_strings(
    const Sequence& x, const std::vector<PhraseSpan>& spans) {
  std::vector<std::string> out;
  out.reserve(spans.size());
  for (const PhraseSpan& span : spans) {
    std::string phrase;
    for (std::uint32_t i = span.begin; i < span.end; ++i)
      phrase.push_back(static_cast<char>(x.alphabet().to_byte(x[i])));
    out.push_back(phrase);
  }
  return out;
}

}  // namespace lzkit::testsupport

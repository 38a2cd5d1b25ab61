#include "lzkit/sequence.hpp"

#include <numeric>

#include "lzkit/errors.hpp"

namespace lzkit {

Alphabet::Alphabet(std::uint32_t size) : size_(size) {
  if (size == 0) throw InputError("alphabet size must be >= 1");
}

Alphabet::Alphabet(std::uint32_t size, std::vector<std::uint8_t> byte_mapping)
    : size_(size), to_byte_(std::move(byte_mapping)) {
  if (size == 0) throw InputError("alphabet size must be >= 1");
  if (to_byte_.size() != size)
    throw InputError("byte mapping must cover exactly `size` values");
  from_byte_.assign(256, -1);
  for (std::uint32_t s = 0; s < size_; ++s) {
    if (from_byte_[to_byte_[s]] != -1)
      throw InputError("byte mapping must be injective");
    from_byte_[to_byte_[s]] = static_cast<std::int32_t>(s);
  }
}

Alphabet Alphabet::binary() { return Alphabet(2, {'0', '1'}); }

Alphabet Alphabet::bytes() {
  std::vector<std::uint8_t> ident(256);
  std::iota(ident.begin(), ident.end(), 0);
  return Alphabet(256, std::move(ident));
}

Alphabet Alphabet::from_symbols(std::string_view symbols) {
  if (symbols.empty()) throw InputError("symbol list must be nonempty");
  std::vector<std::uint8_t> mapping(symbols.begin(), symbols.end());
  const std::uint32_t size = static_cast<std::uint32_t>(mapping.size());
  return Alphabet(size, std::move(mapping));
}

std::uint8_t Alphabet::to_byte(Symbol s) const {
  if (!has_byte_mapping()) throw InputError("alphabet has no byte mapping");
  if (s >= size_) throw InputError("symbol out of range");
  return to_byte_[s];
}

std::int32_t Alphabet::from_byte(std::uint8_t b) const {
  if (!has_byte_mapping()) throw InputError("alphabet has no byte mapping");
  return from_byte_[b];
}

Sequence::Sequence(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (symbols_.size() > kMaxLength)
    throw InputError("sequence longer than 2^32-1 symbols");
  for (Symbol s : symbols_)
    if (s >= alphabet_.size())
      throw InputError("symbol index exceeds alphabet size");
}

Sequence Sequence::from_bits(std::string_view bits) {
  std::vector<Symbol> symbols;
  symbols.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw InputError("expected only '0'/'1' characters");
    symbols.push_back(ch == '1' ? 1 : 0);
  }
  return Sequence(Alphabet::binary(), std::move(symbols));
}

Sequence Sequence::from_bytes(const Alphabet& alphabet,
                              std::span<const std::uint8_t> bytes) {
  std::vector<Symbol> symbols;
  symbols.reserve(bytes.size());
  for (std::uint8_t b : bytes) {
    std::int32_t s = alphabet.from_byte(b);
    if (s < 0) throw InputError("input byte not in alphabet");
    symbols.push_back(static_cast<Symbol>(s));
  }
  return Sequence(alphabet, std::move(symbols));
}

Sequence Sequence::from_text(const Alphabet& alphabet, std::string_view text) {
  return from_bytes(alphabet,
                    {reinterpret_cast<const std::uint8_t*>(text.data()),
                     text.size()});
}

}  // namespace lzkit

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lzkit {

using Symbol = std::uint32_t;

/// Finite alphabet of `size` symbols indexed 0..size-1. An optional byte
/// mapping ties symbol indices to concrete byte values for file I/O; it must
/// be injective and cover exactly `size` byte values.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t size);
  Alphabet(std::uint32_t size, std::vector<std::uint8_t> byte_mapping);

  static Alphabet binary();
  /// All 256 byte values, identity-mapped.
  static Alphabet bytes();
  /// One symbol per distinct character of `symbols`, in the order given.
  static Alphabet from_symbols(std::string_view symbols);

  std::uint32_t size() const { return size_; }
  bool has_byte_mapping() const { return !to_byte_.empty(); }
  std::uint8_t to_byte(Symbol s) const;
  /// -1 if the byte is not mapped.
  std::int32_t from_byte(std::uint8_t b) const;

  /// Alphabets are equal when they index the same number of symbols.
  /// The byte mapping is a presentation detail, not part of identity.
  bool operator==(const Alphabet& other) const {
    return size_ == other.size_;
  }

 private:
  std::uint32_t size_;
  std::vector<std::uint8_t> to_byte_;   // symbol -> byte; empty if unmapped
  std::vector<std::int32_t> from_byte_; // byte -> symbol; empty if unmapped
};

/// Immutable finite-alphabet symbol string. Length is capped at 2^32-1 so
/// positions and phrase ids fit in 32 bits everywhere downstream.
class Sequence {
 public:
  Sequence(Alphabet alphabet, std::vector<Symbol> symbols);

  /// '0'/'1' characters over the binary alphabet.
  static Sequence from_bits(std::string_view bits);
  /// Bytes through the alphabet's byte mapping; rejects unmapped bytes.
  static Sequence from_bytes(const Alphabet& alphabet,
                             std::span<const std::uint8_t> bytes);
  /// Characters of `text` through the byte mapping of `alphabet`.
  static Sequence from_text(const Alphabet& alphabet, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::span<const Symbol> span() const { return symbols_; }

  bool operator==(const Sequence& other) const {
    return alphabet_ == other.alphabet_ && symbols_ == other.symbols_;
  }

  static constexpr std::uint64_t kMaxLength =
      std::numeric_limits<std::uint32_t>::max();

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

}  // namespace lzkit

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lzkit/sequence.hpp"

namespace lzkit {

/// Self-describing compressed stream. Serialized layout, bit-exact:
///   "LZ78"  magic, 4 bytes
///   version, 1 byte (= 1)
///   n, 4-byte big-endian sequence length
///   alphabet-size, 2-byte big-endian
///   payload bytes, bits packed MSB-first, final byte zero-padded
///
/// `payload_bits` is the exact coded length for encoder-produced streams.
/// The header cannot carry it, so streams loaded from bytes report the byte
/// bound 8 * payload.size(); the decoder recovers the exact value while
/// decoding and verifies the padding is zero.
struct BitStream {
  std::uint8_t version = 1;
  std::uint32_t n = 0;
  std::uint32_t alphabet_size = 1;
  std::uint64_t payload_bits = 0;
  std::vector<std::uint8_t> payload;

  std::vector<std::uint8_t> to_bytes() const;
  static BitStream from_bytes(std::span<const std::uint8_t> bytes);
};

/// Supply of key bits, either a finite buffer (bytes, MSB-first) or a seeded
/// generator. Consumption is monotone and tracked.
class KeyStream {
 public:
  static KeyStream from_bytes(std::vector<std::uint8_t> bytes);
  static KeyStream from_seed(std::uint64_t seed);

  /// Bits still available; nullopt for generator-backed (unbounded) keys.
  std::optional<std::uint64_t> remaining() const;
  std::uint64_t consumed() const { return consumed_; }

  /// Throws InputError when a finite key is exhausted.
  bool next_bit();

 private:
  KeyStream() = default;

  bool generator_backed_ = false;
  std::vector<std::uint8_t> bytes_;
  std::uint64_t state_ = 0;    // splitmix64 state for generator keys
  std::uint64_t buffer_ = 0;   // pending generator bits
  std::uint32_t buffered_ = 0;
  std::uint64_t consumed_ = 0;
};

/// LZ78 two-step coding of the incremental parse. Token t (1-indexed over
/// complete phrases) emits ceil(log2 t) bits naming the prefix phrase,
/// then ceil(log2 |A|) bits for the new symbol. An incomplete final phrase
/// emits only ceil(log2 c) bits naming the phrase it duplicates; the decoder
/// recognizes the case from n in the header.
BitStream lz78_encode(const Sequence& x);

/// Exact inverse of lz78_encode. Throws InputError on truncated payloads,
/// out-of-range phrase ids or symbols, or trailing garbage beyond the
/// zero padding.
Sequence lz78_decode(const BitStream& b, const Alphabet& alphabet);

/// Closed form of the payload bit-length of lz78_encode(x).
std::uint64_t code_length(const Sequence& x);

/// One-time pad: XORs the payload bitwise with the next payload_bits key
/// bits. Header unchanged; applying twice with the same key restores b.
/// Throws InputError when the key has fewer bits than the payload.
BitStream otp_apply(const BitStream& b, KeyStream& key);

}  // namespace lzkit

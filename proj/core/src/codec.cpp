#include "lzkit/codec.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>

#include "lzkit/errors.hpp"
#include "lzkit/parsing.hpp"
#include "lzkit/rng.hpp"

namespace lzkit {

namespace {

constexpr std::size_t kHeaderBytes = 11;
constexpr std::uint8_t kMagic[4] = {'L', 'Z', '7', '8'};

/// Bits needed to name one of v choices; 0 when there is at most one.
std::uint32_t ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(v - 1));
}

class BitWriter {
 public:
  void put(bool bit) {
    if (bits_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ % 8));
    ++bits_;
  }

  void put_uint(std::uint64_t value, std::uint32_t width) {
    for (std::uint32_t i = width; i > 0; --i)
      put((value >> (i - 1)) & 1u);
  }

  std::uint64_t bits() const { return bits_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool get() {
    if (pos_ >= 8 * bytes_.size())
      throw InputError("decode: payload truncated");
    bool bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
    ++pos_;
    return bit;
  }

  std::uint64_t get_uint(std::uint32_t width) {
    std::uint64_t value = 0;
    for (std::uint32_t i = 0; i < width; ++i)
      value = (value << 1) | (get() ? 1u : 0u);
    return value;
  }

  std::uint64_t position() const { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> BitStream::to_bytes() const {
  std::vector<std::uint8_t> out(kHeaderBytes + payload.size());
  std::copy(kMagic, kMagic + 4, out.begin());
  out[4] = version;
  out[5] = static_cast<std::uint8_t>(n >> 24);
  out[6] = static_cast<std::uint8_t>(n >> 16);
  out[7] = static_cast<std::uint8_t>(n >> 8);
  out[8] = static_cast<std::uint8_t>(n);
  out[9] = static_cast<std::uint8_t>(alphabet_size >> 8);
  out[10] = static_cast<std::uint8_t>(alphabet_size);
  std::copy(payload.begin(), payload.end(), out.begin() + kHeaderBytes);
  return out;
}

BitStream BitStream::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes)
    throw InputError("stream shorter than header");
  if (!std::equal(kMagic, kMagic + 4, bytes.begin()))
    throw InputError("bad stream magic");

  BitStream b;
  b.version = bytes[4];
  if (b.version != 1) throw InputError("unsupported stream version");
  b.n = (static_cast<std::uint32_t>(bytes[5]) << 24) |
        (static_cast<std::uint32_t>(bytes[6]) << 16) |
        (static_cast<std::uint32_t>(bytes[7]) << 8) |
        static_cast<std::uint32_t>(bytes[8]);
  b.alphabet_size = (static_cast<std::uint32_t>(bytes[9]) << 8) |
                    static_cast<std::uint32_t>(bytes[10]);
  if (b.alphabet_size == 0) throw InputError("zero alphabet size in header");
  b.payload.assign(bytes.begin() + kHeaderBytes, bytes.end());
  b.payload_bits = 8 * b.payload.size();
  return b;
}

KeyStream KeyStream::from_bytes(std::vector<std::uint8_t> bytes) {
  KeyStream k;
  k.bytes_ = std::move(bytes);
  return k;
}

KeyStream KeyStream::from_seed(std::uint64_t seed) {
  KeyStream k;
  k.generator_backed_ = true;
  k.state_ = seed;
  return k;
}

std::optional<std::uint64_t> KeyStream::remaining() const {
  if (generator_backed_) return std::nullopt;
  return 8 * bytes_.size() - consumed_;
}

bool KeyStream::next_bit() {
  if (generator_backed_) {
    if (buffered_ == 0) {
      buffer_ = splitmix64(state_);
      buffered_ = 64;
    }
    bool bit = (buffer_ >> 63) & 1u;
    buffer_ <<= 1;
    --buffered_;
    ++consumed_;
    return bit;
  }
  if (consumed_ >= 8 * bytes_.size())
    throw InputError("one-time pad key exhausted");
  bool bit = (bytes_[consumed_ / 8] >> (7 - consumed_ % 8)) & 1u;
  ++consumed_;
  return bit;
}

BitStream lz78_encode(const Sequence& x) {
  const Alphabet& alphabet = x.alphabet();
  if (alphabet.size() > 0xffffu)
    throw InputError("alphabet too large for stream header");

  const ParseResult parse = incremental_parse(x);
  const std::uint32_t sym_bits = ceil_log2(alphabet.size());

  BitWriter writer;
  const std::uint32_t complete = parse.complete_count();
  for (std::uint32_t t = 1; t <= complete; ++t) {
    writer.put_uint(parse.prefix_links[t - 1], ceil_log2(t));
    writer.put_uint(x[parse.boundaries[t - 1].end - 1], sym_bits);
  }
  if (parse.last_incomplete)
    writer.put_uint(parse.prefix_links[parse.c - 1], ceil_log2(parse.c));

  BitStream b;
  b.n = static_cast<std::uint32_t>(x.size());
  b.alphabet_size = alphabet.size();
  b.payload_bits = writer.bits();
  b.payload = writer.take();
  return b;
}

Sequence lz78_decode(const BitStream& b, const Alphabet& alphabet) {
  if (b.version != 1) throw InputError("unsupported stream version");
  if (alphabet.size() != b.alphabet_size)
    throw InputError("decode: alphabet size does not match header");

  const std::uint32_t n = b.n;
  const std::uint32_t sym_bits = ceil_log2(alphabet.size());
  BitReader reader(b.payload);

  std::vector<Symbol> out;
  out.reserve(n);
  std::vector<PhraseSpan> phrases = {{0, 0}}; // id 0 is the empty phrase

  while (out.size() < n) {
    const std::uint64_t remaining = n - out.size();
    const std::uint64_t t = phrases.size();
    const std::uint64_t id = reader.get_uint(ceil_log2(t));
    if (id >= t) throw InputError("decode: phrase id out of range");

    const PhraseSpan prefix = phrases[id];
    if (prefix.length() >= remaining) {
      // Only the incomplete final phrase can reach the end of the input;
      // it duplicates phrase `id` exactly.
      if (prefix.length() != remaining)
        throw InputError("decode: final phrase overruns sequence length");
      for (std::uint32_t i = prefix.begin; i < prefix.end; ++i)
        out.push_back(out[i]);
      break;
    }

    const std::uint64_t sym = reader.get_uint(sym_bits);
    if (sym >= alphabet.size())
      throw InputError("decode: symbol out of range");
    const std::uint32_t start = static_cast<std::uint32_t>(out.size());
    for (std::uint32_t i = prefix.begin; i < prefix.end; ++i)
      out.push_back(out[i]);
    out.push_back(static_cast<Symbol>(sym));
    phrases.push_back({start, static_cast<std::uint32_t>(out.size())});
  }

  const std::uint64_t used = reader.position();
  if ((used + 7) / 8 != b.payload.size())
    throw InputError("decode: trailing bytes after coded payload");
  for (std::uint64_t p = used; p < 8 * b.payload.size(); ++p) {
    if ((b.payload[p / 8] >> (7 - p % 8)) & 1u)
      throw InputError("decode: nonzero padding bits");
  }

  return Sequence(alphabet, std::move(out));
}

std::uint64_t code_length(const Sequence& x) {
  const ParseResult parse = incremental_parse(x);
  const std::uint64_t sym_bits = ceil_log2(x.alphabet().size());
  std::uint64_t total = 0;
  const std::uint32_t complete = parse.complete_count();
  for (std::uint32_t t = 1; t <= complete; ++t)
    total += ceil_log2(t) + sym_bits;
  if (parse.last_incomplete) total += ceil_log2(parse.c);
  return total;
}

BitStream otp_apply(const BitStream& b, KeyStream& key) {
  if (b.payload_bits > 8 * b.payload.size())
    throw InputError("otp: payload_bits exceeds payload");
  if (auto left = key.remaining(); left && *left < b.payload_bits)
    throw InputError("otp: key shorter than payload");

  BitStream out = b;
  for (std::uint64_t p = 0; p < b.payload_bits; ++p) {
    if (key.next_bit())
      out.payload[p / 8] ^= static_cast<std::uint8_t>(0x80u >> (p % 8));
  }
  return out;
}

}  // namespace lzkit

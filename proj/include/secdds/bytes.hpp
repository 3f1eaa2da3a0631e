#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace secdds {

using Bytes = std::vector<std::uint8_t>;
using ConstSpan = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(ConstSpan b);

std::string to_hex(ConstSpan b);
Bytes from_hex(std::string_view hex);  // throws on odd length / bad digit

inline Bytes concat(std::initializer_list<ConstSpan> parts) {
  Bytes out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

template <std::size_t N>
std::array<std::uint8_t, N> to_array(ConstSpan b) {
  std::array<std::uint8_t, N> a{};
  std::memcpy(a.data(), b.data(), std::min(N, b.size()));
  return a;
}

/// Append-only builder for the canonical encodings used on the wire and in
/// signed transcripts. Multi-byte scalar fields are little-endian unless a
/// method says otherwise (counters in nonces are big-endian).
class ByteWriter {
public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16le(std::uint16_t v);
  void u32le(std::uint32_t v);
  void u64le(std::uint64_t v);
  void u32be(std::uint32_t v);
  void u64be(std::uint64_t v);
  void raw(ConstSpan b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  void raw(std::string_view s) { raw(to_bytes(s)); }
  /// u32le length followed by the bytes; the canonical field form.
  void field(ConstSpan b);
  void field(std::string_view s) { field(to_bytes(s)); }

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }

private:
  Bytes buf_;
};

/// Bounds-checked reader; throws Error(truncated_submessage) past the end.
class ByteReader {
public:
  explicit ByteReader(ConstSpan b) : data_(b) {}

  std::uint8_t u8();
  std::uint16_t u16le();
  std::uint32_t u32le();
  std::uint64_t u64le();
  std::uint32_t u32be();
  std::uint64_t u64be();
  Bytes raw(std::size_t n);
  Bytes field();  // u32le length + bytes

  template <std::size_t N>
  std::array<std::uint8_t, N> arr() {
    return to_array<N>(raw(N));
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return remaining() == 0; }

private:
  void need(std::size_t n);
  ConstSpan data_;
  std::size_t pos_ = 0;
};

}  // namespace secdds

#include "secdds/rng.hpp"

#include <openssl/rand.h>

#include <cstring>

#include "secdds/errors.hpp"

namespace secdds {

void OsRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
    fail(Errc::io_error, "OS entropy unavailable");
}

SeededRandom::SeededRandom(std::uint64_t seed) {
  ByteWriter w;
  w.raw("secdds-seed");
  w.u64be(seed);
  key_ = sha256(w.bytes());
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::lock_guard lock(mu_);
  std::size_t off = 0;
  while (off < out.size()) {
    ByteWriter w;
    w.raw(key_);
    w.u64be(counter_++);
    Digest block = sha256(w.bytes());
    std::size_t n = std::min(block.size(), out.size() - off);
    std::memcpy(out.data() + off, block.data(), n);
    off += n;
  }
}

std::shared_ptr<SeededRandom> SeededRandom::fork(std::string_view label) const {
  ByteWriter w;
  w.raw(key_);
  w.raw("/");
  w.raw(label);
  return std::make_shared<SeededRandom>(sha256(w.bytes()));
}

std::uint64_t SeededRandom::below(std::uint64_t bound) {
  // rejection sampling over the top range to stay unbiased
  std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  for (;;) {
    std::uint8_t raw[8];
    fill(raw);
    std::uint64_t v = 0;
    for (auto b : raw) v = (v << 8) | b;
    if (v < limit || limit == 0) return v % bound;
  }
}

}  // namespace secdds

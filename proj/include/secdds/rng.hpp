#pragma once

#include <memory>
#include <mutex>

#include "secdds/bytes.hpp"
#include "secdds/hash.hpp"

namespace secdds {

/// Injectable entropy source. Production paths use OsRandom; tests and the
/// deterministic harness mode use SeededRandom so two runs with the same
/// seed produce byte-identical traffic.
class RandomSource {
public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n) {
    Bytes b(n);
    fill(b);
    return b;
  }
};

class OsRandom : public RandomSource {
public:
  void fill(std::span<std::uint8_t> out) override;
};

/// SHA-256 counter stream: block i = SHA-256(key || be64(i)).
class SeededRandom : public RandomSource {
public:
  explicit SeededRandom(std::uint64_t seed);
  explicit SeededRandom(const Digest& key) : key_(key) {}

  void fill(std::span<std::uint8_t> out) override;

  /// Independent child stream; forks with the same label are identical.
  std::shared_ptr<SeededRandom> fork(std::string_view label) const;

  /// Uniform integer in [0, bound), bound > 0. Convenience for tests.
  std::uint64_t below(std::uint64_t bound);

private:
  Digest key_{};
  std::uint64_t counter_ = 0;
  std::mutex mu_;
};

}  // namespace secdds

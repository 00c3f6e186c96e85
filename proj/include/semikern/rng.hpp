#pragma once

#include <cstdint>

namespace semikern {

// Deterministic generator with a fixed algorithm (splitmix64), so that
// reports produced from the same seed are byte-identical on every platform.
// std::uniform_int_distribution is implementation-defined and must not be
// used anywhere determinism matters.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n must be positive
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

}  // namespace semikern

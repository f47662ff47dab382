#pragma once

#include <cstdint>

#include "rposet/rational.hpp"

namespace rposet {

inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded through SplitMix64. Output is identical on every
/// platform; the standard distributions are avoided for the same reason.
class Prng {
public:
  explicit Prng(std::uint64_t seed) noexcept { reseed(seed); }

  /// Independent stream for (seed, stream); used for per-trial generators.
  static Prng stream(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t s = stream;
    return Prng(seed ^ splitmix64(s));
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, bound) without modulo bias; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept { return lo + below(hi - lo + 1); }

  /// True with exactly the given rational probability (clamped to [0, 1]).
  bool bernoulli(const Rational& p) noexcept {
    if (p.num() <= 0) return false;
    if (p.num() >= p.den()) return true;
    return below(static_cast<std::uint64_t>(p.den())) < static_cast<std::uint64_t>(p.num());
  }

private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

  void reseed(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  std::uint64_t s_[4]{};
};

}  // namespace rposet

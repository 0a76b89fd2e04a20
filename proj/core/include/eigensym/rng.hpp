#pragma once

#include <cstdint>

namespace eigensym {

/// xorshift64* generator (Vigna 2014) seeded through one splitmix64 step, so
/// every 64-bit seed (including 0) yields a nonzero state. Output is
/// bit-identical across platforms for a given seed.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }
  /// Uniform integer in [0, bound). Slight modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed from a base seed and a salt.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return Xorshift64Star::splitmix64(seed ^ Xorshift64Star::splitmix64(salt + 0x632BE59BD9B4E019ULL));
}

}  // namespace eigensym

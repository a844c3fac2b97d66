#pragma once

#include <cstdint>

namespace romankit {

// splitmix64 is the project-wide keyed hash and PRNG: every seeded artifact
// (RAND maps, corpus samples) derives from it, so all of them are
// reproducible across platforms and standard libraries. Constants are the
// reference ones from Steele, Lea & Flood's SplittableRandom.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

// The splitmix64 output function applied to one state value: returns the
// stream element that state x would produce (add gamma, then finalize).
inline std::uint64_t splitmix64_mix(std::uint64_t x) {
  std::uint64_t z = x + kSplitMixGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Sequential splitmix64 stream. SplitMix64(0).next() == 0xE220A8397B1DCDAF,
// matching the published reference vector.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t out = splitmix64_mix(state_);
    state_ += kSplitMixGamma;
    return out;
  }

  // Uniform draw from [0, bound) via rejection sampling, so the result is
  // exactly uniform and identical everywhere. bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace romankit

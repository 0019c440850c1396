#ifndef PALEY_RNG_HPP
#define PALEY_RNG_HPP

#include <cstdint>

namespace paley {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kMixMul1 = 0xBF58476D1CE4E5B9ULL;
inline constexpr std::uint64_t kMixMul2 = 0x94D049BB133111EBULL;

// 64-bit finalizer (splitmix64 / murmur3-style avalanche).
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= kMixMul1;
  z ^= z >> 27;
  z *= kMixMul2;
  z ^= z >> 31;
  return z;
}

// Raw per-trial counter base: master_seed ^ (N*kGolden) ^ (trial*kMixMul1).
inline std::uint64_t derive_subseed(std::uint64_t master_seed, std::uint64_t n,
                                    std::uint64_t trial_index) noexcept {
  return master_seed ^ (n * kGolden) ^ (trial_index * kMixMul1);
}

// Counter-mixing word stream: word(i) = mix64(seed + i*kGolden).
// word(0) is mix64(seed) itself, so the stream is a pure function of the seed.
class WordStream {
 public:
  explicit WordStream(std::uint64_t seed) noexcept : counter_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t w = mix64(counter_);
    counter_ += kGolden;
    return w;
  }

  // i-th word without disturbing stream position.
  static std::uint64_t word_at(std::uint64_t seed, std::uint64_t i) noexcept {
    return mix64(seed + i * kGolden);
  }

 private:
  std::uint64_t counter_;
};

// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t bounded(WordStream& ws, std::uint64_t bound) noexcept {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    std::uint64_t w = ws.next();
    if (w < limit) return w % bound;
  }
}

}  // namespace paley

#endif

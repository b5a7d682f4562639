#pragma once

#include <cstdint>

namespace galois {

// splitmix64 (Steele, Lea, Flood / Vigna). Constants:
//   increment      0x9E3779B97F4A7C15
//   mix multiplier 0xBF58476D1CE4E5B9, then 0x94D049BB133111EB
//   shifts         30, 27, 31
// Chosen so generated streams are reproducible from the seed alone across
// implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

private:
  std::uint64_t state_;
};

}  // namespace galois

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hanabi_tom {

// splitmix64 step; also used to derive per-episode and per-seat seeds.
inline uint64_t SplitMix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t MixSeed(uint64_t master, uint64_t index) {
  uint64_t s = master;
  SplitMix64(s);
  s ^= 0x5851f42d4c957f2dULL * (index + 1);
  return SplitMix64(s);
}

// Deterministic RNG wrapper. std::mt19937_64 output is fully specified by the
// standard; the bounded draw and shuffle below avoid std::*_distribution,
// whose mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, bound) via rejection.
  uint64_t UniformInt(uint64_t bound) {
    uint64_t threshold = (-bound) % bound;
    for (;;) {
      uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hanabi_tom

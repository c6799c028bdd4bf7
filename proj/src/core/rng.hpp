#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace riskplan {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic derivation of independent seeds from a master seed plus
// coordinates (trial index, grid cell, ...). Order-sensitive by design.
inline uint64_t mix_seed(std::initializer_list<uint64_t> parts) {
  uint64_t h = 0x8f1bbcdcbfa53e0bULL;
  for (uint64_t p : parts) h = splitmix64(h ^ p);
  return h;
}

// mt19937_64 core with self-contained sampling helpers. The std <random>
// distributions are not pinned across standard libraries, so every draw
// here goes through our own arithmetic; sequences are reproducible on any
// conforming platform for a fixed seed.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : engine_(splitmix64(seed)) {}

  uint64_t next_u64() { return engine_(); }

  // Unbiased uniform draw in [0, n). Mask-and-reject on the top bits.
  uint64_t next_below(uint64_t n) {
    uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    uint64_t v;
    do {
      v = engine_() & mask;
    } while (v >= n);
    return v;
  }

  int next_int(int n) { return static_cast<int>(next_below(static_cast<uint64_t>(n))); }

  // 53-bit uniform double in [0, 1).
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

  // First k entries of a random permutation of [0, n).
  std::vector<int> sample_distinct(int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + next_int(n - i);
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace riskplan

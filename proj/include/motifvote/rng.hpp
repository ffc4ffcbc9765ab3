#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace motifvote {

// SplitMix64. Used both for sub-stream seed derivation and as the per-stream
// generator so runs are reproducible across platforms and standard libraries.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() { return splitmix64(state_); }

  // Unbiased uniform integer in [0, bound), bound >= 1.
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  uint64_t state_;
};

// One master seed; every phase/index/iteration gets its own derived stream.
inline Rng sub_rng(uint64_t master, uint64_t phase, uint64_t index = 0, uint64_t iteration = 0) {
  uint64_t s = mix_seed(master, phase);
  s = mix_seed(s, index);
  s = mix_seed(s, iteration);
  return Rng(s);
}

// Uniform sample of `count` distinct values from [lo, hi] (inclusive) in
// ascending order. Returns the whole range when it has at most `count` values.
inline std::vector<int> sample_without_replacement(Rng& rng, int lo, int hi, long long count) {
  std::vector<int> pool;
  if (hi < lo) return pool;
  long long size = static_cast<long long>(hi) - lo + 1;
  pool.reserve(static_cast<size_t>(size));
  for (int p = lo; p <= hi; ++p) pool.push_back(p);
  if (count >= size) return pool;
  // Partial Fisher-Yates: the first `count` slots become the sample.
  for (long long i = 0; i < count; ++i) {
    long long j = i + static_cast<long long>(rng.below(static_cast<uint64_t>(size - i)));
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
  }
  pool.resize(static_cast<size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace motifvote

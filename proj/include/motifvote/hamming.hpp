#pragma once

#include <cstdint>
#include <cstring>

namespace motifvote {

namespace detail {

// Number of nonzero bytes in x (SWAR, no per-byte branches).
inline int nonzero_bytes(uint64_t x) {
  constexpr uint64_t kHigh = 0x8080808080808080ULL;
  constexpr uint64_t kOnes = 0x0101010101010101ULL;
  uint64_t t = (x | ((x | kHigh) - kOnes)) & kHigh;
  return __builtin_popcountll(t);
}

}  // namespace detail

// Mismatch count between p[0..len) and q[0..len).
inline int mismatch_count(const uint8_t* p, const uint8_t* q, int len) {
  int mis = 0, i = 0;
  for (; i + 8 <= len; i += 8) {
    uint64_t a, b;
    std::memcpy(&a, p + i, 8);
    std::memcpy(&b, q + i, 8);
    if (uint64_t x = a ^ b) mis += detail::nonzero_bytes(x);
  }
  for (; i < len; ++i) mis += (p[i] != q[i]);
  return mis;
}

// Mismatch count, giving up as soon as it exceeds `cutoff`. Returns the exact
// count when it is <= cutoff, otherwise some value > cutoff. `chars_examined`
// is advanced by the number of positions actually read. This sits in the
// innermost all-pairs loops, hence the word-at-a-time path.
inline int mismatch_count_leq(const uint8_t* p, const uint8_t* q, int len, int cutoff,
                              uint64_t& chars_examined) {
  int mis = 0, i = 0;
  for (; i + 8 <= len; i += 8) {
    uint64_t a, b;
    std::memcpy(&a, p + i, 8);
    std::memcpy(&b, q + i, 8);
    if (uint64_t x = a ^ b) {
      mis += detail::nonzero_bytes(x);
      if (mis > cutoff) {
        chars_examined += static_cast<uint64_t>(i + 8);
        return mis;
      }
    }
  }
  for (; i < len; ++i) {
    mis += (p[i] != q[i]);
    if (mis > cutoff) {
      chars_examined += static_cast<uint64_t>(i + 1);
      return mis;
    }
  }
  chars_examined += static_cast<uint64_t>(len);
  return mis;
}

// Integer threshold for "relative distance <= bound" over `len` positions.
// The epsilon absorbs representation error when bound*len is integral.
inline int mismatch_cutoff(double bound, int len) {
  double scaled = bound * static_cast<double>(len);
  if (scaled < 0) return -1;
  return static_cast<int>(scaled + 1e-9);
}

}  // namespace motifvote

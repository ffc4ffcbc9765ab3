#pragma once

#include <stdexcept>

#include "motifvote/alphabet.hpp"
#include "motifvote/hamming.hpp"
#include "motifvote/params.hpp"

namespace motifvote {

enum class MatchKind { WeakLeft, Left, WeakRight, Right, Full };

namespace detail {

// Forward scan over the first w characters. The weak clause requires every
// prefix of length i in [v, w] to stay within relative distance beta; the
// strict clause additionally pins the first v-1 characters. One pass with a
// running mismatch count covers both.
inline bool left_match(const uint8_t* x1, const uint8_t* x2, int w, int v, double beta, bool strict) {
  int exact = strict ? std::min(v - 1, w) : 0;
  for (int i = 0; i < exact; ++i)
    if (x1[i] != x2[i]) return false;
  int mis = 0;
  for (int i = 1; i <= w; ++i) {
    mis += (x1[i - 1] != x2[i - 1]);
    if (i >= v && mis > mismatch_cutoff(beta, i)) return false;
  }
  return true;
}

// Same predicate on the reversed strings (reads from the tail).
inline bool right_match(const uint8_t* x1, int n1, const uint8_t* x2, int n2, int w, int v,
                        double beta, bool strict) {
  int exact = strict ? std::min(v - 1, w) : 0;
  for (int i = 0; i < exact; ++i)
    if (x1[n1 - 1 - i] != x2[n2 - 1 - i]) return false;
  int mis = 0;
  for (int i = 1; i <= w; ++i) {
    mis += (x1[n1 - i] != x2[n2 - i]);
    if (i >= v && mis > mismatch_cutoff(beta, i)) return false;
  }
  return true;
}

}  // namespace detail

// Definition of the five matching predicates used by boundary refinement and
// extraction. `w` is the resolved window length; strings may be longer, in
// which case the left predicates read the first w characters and the right
// predicates the last w.
inline bool match_predicate(MatchKind kind, const SymbolString& x1, const SymbolString& x2,
                            const DerivedParams& p, int w) {
  if (static_cast<int>(x1.size()) < w || static_cast<int>(x2.size()) < w)
    throw std::invalid_argument("match_predicate: strings shorter than the window");
  switch (kind) {
    case MatchKind::WeakLeft:
      return detail::left_match(x1.data(), x2.data(), w, p.v, p.beta, false);
    case MatchKind::Left:
      return detail::left_match(x1.data(), x2.data(), w, p.v, p.beta, true);
    case MatchKind::WeakRight:
      return detail::right_match(x1.data(), static_cast<int>(x1.size()), x2.data(),
                                 static_cast<int>(x2.size()), w, p.v, p.beta, false);
    case MatchKind::Right:
      return detail::right_match(x1.data(), static_cast<int>(x1.size()), x2.data(),
                                 static_cast<int>(x2.size()), w, p.v, p.beta, true);
    case MatchKind::Full:
      return match_predicate(MatchKind::Left, x1, x2, p, w) &&
             match_predicate(MatchKind::Right, x1, x2, p, w);
  }
  return false;
}

}  // namespace motifvote

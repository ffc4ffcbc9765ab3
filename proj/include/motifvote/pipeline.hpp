#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "motifvote/alphabet.hpp"
#include "motifvote/hamming.hpp"
#include "motifvote/matchkit.hpp"
#include "motifvote/params.hpp"
#include "motifvote/rng.hpp"

namespace motifvote {

struct WorkCounters {
  uint64_t positions_sampled = 0;
  uint64_t window_comparisons = 0;
  uint64_t character_comparisons = 0;

  uint64_t preprocessing_work() const { return positions_sampled + window_comparisons; }
  bool operator==(const WorkCounters&) const = default;
};

// 1-based inclusive interval.
struct Interval {
  int lo = 0;
  int hi = 0;
  bool operator==(const Interval&) const = default;
};

struct RoughBoundaries {
  std::optional<int> left;
  std::optional<int> right;
  bool known() const { return left && right; }
  bool operator==(const RoughBoundaries&) const = default;
};

// Collision anchors: least/greatest qualifying window start per sequence.
struct CollisionAnchors {
  std::optional<int> a_min, a_max, b_min, b_max;
  bool found() const { return a_min.has_value(); }
  bool operator==(const CollisionAnchors&) const = default;
};

struct ImprovedAnchors {
  std::optional<int> a_left, a_right, b_left, b_right;
  bool operator==(const ImprovedAnchors&) const = default;
};

namespace detail {

inline int last_window_start(const SymbolString& s, int w) { return static_cast<int>(s.size()) - w + 1; }

inline Interval clip(Interval iv, int lo, int hi) {
  return {std::max(iv.lo, lo), std::min(iv.hi, hi)};
}

inline std::string_view window_view(const SymbolString& s, int start, int w) {
  return {reinterpret_cast<const char*>(s.data() + (start - 1)), static_cast<size_t>(w)};
}

}  // namespace detail

// Position selection over a union of intervals. The deterministic variant
// takes everything; the randomized variants take everything while the block
// size L sits below the (log n)^(3+tau)/100 threshold and otherwise sample
// ceil(M(L)) positions per block of L (whole block when it is smaller).
// Output is sorted and duplicate-free; positions_sampled grows by its size.
inline std::vector<int> point_selection(const SymbolString& s, long long block,
                                        const std::vector<Interval>& intervals, AlgorithmType algo,
                                        const DerivedParams& p, Rng& rng, WorkCounters& wc) {
  if (block < 1) throw std::invalid_argument("point_selection: block size must be positive");
  std::vector<int> out;
  for (const Interval& iv : intervals) {
    if (iv.lo > iv.hi) continue;
    if (iv.lo < 1 || iv.hi > static_cast<int>(s.size()))
      throw std::invalid_argument("point_selection: interval outside the sequence");
    bool take_all = algo == AlgorithmType::DeterministicSuperquadratic ||
                    static_cast<double>(block) < p.selection_threshold();
    if (take_all) {
      for (int pos = iv.lo; pos <= iv.hi; ++pos) out.push_back(pos);
      continue;
    }
    long long per_block = ceil_tol(p.sample_count(block));
    for (long long lo = iv.lo; lo <= iv.hi; lo += block) {
      int hi = static_cast<int>(std::min<long long>(lo + block - 1, iv.hi));
      std::vector<int> picked = sample_without_replacement(rng, static_cast<int>(lo), hi, per_block);
      out.insert(out.end(), picked.begin(), picked.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  wc.positions_sampled += out.size();
  return out;
}

// Least/greatest window starts over all pairs (a in u1, b in u2) whose
// length-w windows are within relative distance omega. omega = 0 groups the
// windows by exact content (one pass per side); omega > 0 scans the pairs
// with an early-exit mismatch count.
inline CollisionAnchors collision_detection(const SymbolString& s1, const std::vector<int>& u1,
                                            const SymbolString& s2, const std::vector<int>& u2,
                                            double omega, const DerivedParams& p, WorkCounters& wc) {
  const int w = p.window_length();
  for (int a : u1)
    if (a < 1 || a + w - 1 > static_cast<int>(s1.size()))
      throw std::invalid_argument("collision_detection: position without a full window in S1");
  for (int b : u2)
    if (b < 1 || b + w - 1 > static_cast<int>(s2.size()))
      throw std::invalid_argument("collision_detection: position without a full window in S2");

  CollisionAnchors res;
  auto note = [&](int a, int b) {
    if (!res.a_min || a < *res.a_min) res.a_min = a;
    if (!res.a_max || a > *res.a_max) res.a_max = a;
    if (!res.b_min || b < *res.b_min) res.b_min = b;
    if (!res.b_max || b > *res.b_max) res.b_max = b;
  };

  if (omega == 0.0) {
    // Fingerprint bucketing: each window is hashed once, qualifying pairs are
    // exactly the identical-content buckets.
    std::unordered_map<std::string_view, std::pair<int, int>> buckets;
    buckets.reserve(u2.size() * 2);
    for (int b : u2) {
      auto [it, inserted] = buckets.try_emplace(detail::window_view(s2, b, w), b, b);
      if (!inserted) {
        it->second.first = std::min(it->second.first, b);
        it->second.second = std::max(it->second.second, b);
      }
    }
    for (int a : u1) {
      auto it = buckets.find(detail::window_view(s1, a, w));
      if (it != buckets.end()) note(a, it->second.first), note(a, it->second.second);
    }
    wc.window_comparisons += u1.size() + u2.size();
    wc.character_comparisons += static_cast<uint64_t>(w) * (u1.size() + u2.size());
    return res;
  }

  const int cutoff = mismatch_cutoff(omega, w);
  uint64_t chars = 0;
  for (int a : u1) {
    const uint8_t* pa = s1.data() + (a - 1);
    for (int b : u2) {
      if (mismatch_count_leq(pa, s2.data() + (b - 1), w, cutoff, chars) <= cutoff) note(a, b);
    }
  }
  wc.window_comparisons += static_cast<uint64_t>(u1.size()) * u2.size();
  wc.character_comparisons += chars;
  return res;
}

// Refines rough anchors by scanning radius L around them for window pairs
// within relative distance beta. Returns window starts: (least a near the
// left anchors, greatest a near the right anchors, least b, greatest b), each
// unset when the quadrant has no qualifying pair.
inline ImprovedAnchors improve_boundaries(const SymbolString& s1, int a_l, int a_r,
                                          const SymbolString& s2, int f_l, int f_r, long long radius,
                                          const DerivedParams& p, WorkCounters& wc) {
  if (radius < 1) throw std::invalid_argument("improve_boundaries: radius must be positive");
  const int w = p.window_length();
  const int cutoff = mismatch_cutoff(p.beta, w);
  const int L = static_cast<int>(std::min<long long>(radius, 1 << 30));

  auto quadrant = [&](int ca, int cb, std::optional<int>& best_a, std::optional<int>& best_b) {
    Interval ia = detail::clip({ca - L, ca + L}, 1, detail::last_window_start(s1, w));
    Interval ib = detail::clip({cb - L, cb + L}, 1, detail::last_window_start(s2, w));
    uint64_t chars = 0;
    uint64_t pairs = 0;
    for (int a = ia.lo; a <= ia.hi; ++a) {
      const uint8_t* pa = s1.data() + (a - 1);
      for (int b = ib.lo; b <= ib.hi; ++b) {
        ++pairs;
        if (mismatch_count_leq(pa, s2.data() + (b - 1), w, cutoff, chars) <= cutoff) {
          if (!best_a || a < *best_a) best_a = a;
          if (!best_b || b < *best_b) best_b = b;
        }
      }
    }
    wc.window_comparisons += pairs;
    wc.character_comparisons += chars;
  };
  auto quadrant_max = [&](int ca, int cb, std::optional<int>& best_a, std::optional<int>& best_b) {
    Interval ia = detail::clip({ca - L, ca + L}, 1, detail::last_window_start(s1, w));
    Interval ib = detail::clip({cb - L, cb + L}, 1, detail::last_window_start(s2, w));
    uint64_t chars = 0;
    uint64_t pairs = 0;
    for (int a = ia.lo; a <= ia.hi; ++a) {
      const uint8_t* pa = s1.data() + (a - 1);
      for (int b = ib.lo; b <= ib.hi; ++b) {
        ++pairs;
        if (mismatch_count_leq(pa, s2.data() + (b - 1), w, cutoff, chars) <= cutoff) {
          if (!best_a || a > *best_a) best_a = a;
          if (!best_b || b > *best_b) best_b = b;
        }
      }
    }
    wc.window_comparisons += pairs;
    wc.character_comparisons += chars;
  };

  ImprovedAnchors res;
  quadrant(a_l, f_l, res.a_left, res.b_left);
  quadrant_max(a_r, f_r, res.a_right, res.b_right);
  return res;
}

struct PairBoundaries {
  RoughBoundaries first;
  RoughBoundaries second;
};

namespace detail {

// Window starts feed the matching scans as left boundaries directly, while
// right boundaries are consumed as window *ends*; convert on the way out.
inline RoughBoundaries to_boundaries(std::optional<int> left_start, std::optional<int> right_start, int w) {
  RoughBoundaries rb;
  rb.left = left_start;
  if (right_start) rb.right = *right_start + w - 1;
  return rb;
}

}  // namespace detail

// Halving search for initial rough boundaries of a sequence pair. Starts at
// L = ceil(n^(2/5)) and returns the refined anchors of the first block size
// that produces a collision; FAILURE (nullopt) when none ever does.
inline std::optional<PairBoundaries> initial_boundaries(const SymbolString& s1, const SymbolString& s2,
                                                        AlgorithmType algo, const DerivedParams& p,
                                                        Rng& rng, WorkCounters& wc) {
  const int w = p.window_length();
  if (static_cast<int>(s1.size()) < w || static_cast<int>(s2.size()) < w)
    throw std::invalid_argument("initial_boundaries: sequences shorter than the window");

  long long L = ceil_tol(std::pow(static_cast<double>(p.n), 0.4));
  const double stop = 0.5 * p.selection_threshold();
  uint64_t iteration = 0;
  do {
    std::vector<Interval> full1 = {{1, detail::last_window_start(s1, w)}};
    std::vector<Interval> full2 = {{1, detail::last_window_start(s2, w)}};
    Rng r1 = sub_rng(rng.next(), 1, 0, iteration);
    Rng r2 = sub_rng(rng.next(), 1, 1, iteration);
    std::vector<int> u1 = point_selection(s1, L, full1, algo, p, r1, wc);
    std::vector<int> u2 = point_selection(s2, L, full2, algo, p, r2, wc);
    CollisionAnchors c = collision_detection(s1, u1, s2, u2, omega_for(algo, p), p, wc);
    if (c.found()) {
      ImprovedAnchors ia = improve_boundaries(s1, *c.a_min, *c.a_max, s2, *c.b_min, *c.b_max, 2 * L, p, wc);
      PairBoundaries pb;
      pb.first = detail::to_boundaries(ia.a_left, ia.a_right, w);
      pb.second = detail::to_boundaries(ia.b_left, ia.b_right, w);
      return pb;
    }
    L /= 2;
    ++iteration;
  } while (L >= 1 && static_cast<double>(L) >= stop);
  return std::nullopt;
}

// Lower median of {right - left} over the fully-known pairs.
inline int motif_length_median(const std::vector<RoughBoundaries>& rough) {
  std::vector<int> lengths;
  for (const auto& rb : rough)
    if (rb.known()) lengths.push_back(*rb.right - *rb.left);
  if (lengths.empty()) throw std::runtime_error("motif_length_median: no valid boundary pairs");
  std::sort(lengths.begin(), lengths.end());
  return lengths[(lengths.size() - 1) / 2];
}

// Scans for the left boundary ascending from roughLeft and for the right
// boundary descending from roughRight, using the strict predicates against
// the candidate motif edges. EMPTY (nullopt) when either side misses.
inline std::optional<Interval> match_region(const SymbolString& g_l, const SymbolString& g_r,
                                            const SymbolString& s, const RoughBoundaries& rb,
                                            const DerivedParams& p, WorkCounters& wc) {
  const int w = p.window_length();
  if (static_cast<int>(g_l.size()) != w || static_cast<int>(g_r.size()) != w)
    throw std::invalid_argument("match_region: motif edges must have window length");
  if (!rb.known()) throw std::invalid_argument("match_region: rough boundaries must be known");

  const int slack = p.v + p.u2;
  std::optional<int> a;
  {
    Interval scan = detail::clip({*rb.left, *rb.left + slack}, 1, detail::last_window_start(s, w));
    SymbolString window(static_cast<size_t>(w));
    for (int cand = scan.lo; cand <= scan.hi; ++cand) {
      window.assign(s.begin() + (cand - 1), s.begin() + (cand - 1 + w));
      ++wc.window_comparisons;
      wc.character_comparisons += static_cast<uint64_t>(w);
      if (match_predicate(MatchKind::Left, g_l, window, p, w)) {
        a = cand;
        break;
      }
    }
  }
  std::optional<int> b;
  {
    Interval scan = detail::clip({*rb.right - slack, *rb.right}, w, static_cast<int>(s.size()));
    SymbolString window(static_cast<size_t>(w));
    for (int cand = scan.hi; cand >= scan.lo; --cand) {
      window.assign(s.begin() + (cand - w), s.begin() + cand);
      ++wc.window_comparisons;
      wc.character_comparisons += static_cast<uint64_t>(w);
      if (match_predicate(MatchKind::Right, g_r, window, p, w)) {
        b = cand;
        break;
      }
    }
  }
  if (a && b && *a <= *b) return Interval{*a, *b};
  return std::nullopt;
}

using ExtractedRegions = std::vector<std::optional<Interval>>;

// Tries every candidate motif-edge pair cut from the anchor sequence and
// returns the first whose per-member match failures stay under the threshold
// min(floor((Q0+R+2eps)*k2), floor(k2/4)); NO_CANDIDATE (nullopt) otherwise.
// Members with unknown boundaries count as failures without being scanned.
//
// The cap is k2/4 rather than the analysis's k2/2 majority bound: with a
// 4-letter alphabet a candidate cut one position before the true boundary
// is matched by a member whenever its preceding background character happens
// to agree (probability 1/4 each), so a half-empty acceptance level gets
// cleared by coincidence in roughly 8% of runs and votes a consensus one
// character too long. Requiring three quarters of the members keeps that
// failure mode out of reach while leaving genuinely stable candidates
// accepted.
inline std::optional<ExtractedRegions> extract_phase(const SymbolString& anchor,
                                                     const RoughBoundaries& anchor_rb,
                                                     const std::vector<SymbolString>& z2,
                                                     const std::vector<RoughBoundaries>& z2_rb,
                                                     const DerivedParams& p, WorkCounters& wc) {
  if (!anchor_rb.known()) throw std::invalid_argument("extract_phase: anchor boundaries must be known");
  if (z2.size() != z2_rb.size()) throw std::invalid_argument("extract_phase: boundary list size mismatch");
  const int w = p.window_length();
  const int k2 = static_cast<int>(z2.size());
  const double loose = (p.q0 + p.big_r + 2.0 * p.epsilon) * k2;
  const long long threshold = std::min<long long>(static_cast<long long>(std::max(0.0, loose)), k2 / 4);

  const int slack = p.v + p.u1;
  Interval a_range = detail::clip({*anchor_rb.left, *anchor_rb.left + slack}, 1,
                                  detail::last_window_start(anchor, w));
  Interval b_range = detail::clip({*anchor_rb.right - slack, *anchor_rb.right}, w,
                                  static_cast<int>(anchor.size()));

  auto evaluate = [&](int a, int b, ExtractedRegions& regions) {
    SymbolString g_l(anchor.begin() + (a - 1), anchor.begin() + (a - 1 + w));
    SymbolString g_r(anchor.begin() + (b - w), anchor.begin() + b);
    regions.assign(z2.size(), std::nullopt);
    long long empties = 0;
    for (int j = 0; j < k2; ++j) {
      if (z2_rb[static_cast<size_t>(j)].known() &&
          static_cast<int>(z2[static_cast<size_t>(j)].size()) >= w)
        regions[static_cast<size_t>(j)] =
            match_region(g_l, g_r, z2[static_cast<size_t>(j)], z2_rb[static_cast<size_t>(j)], p, wc);
      if (!regions[static_cast<size_t>(j)]) ++empties;
    }
    return empties;
  };

  for (int a = a_range.lo; a <= a_range.hi; ++a) {
    for (int b = b_range.hi; b >= b_range.lo; --b) {
      ExtractedRegions regions(z2.size());
      long long empties = evaluate(a, b, regions);
      if (empties > threshold) continue;
      // The scan reaches boundary guesses that overshoot the motif before the
      // exact ones; a candidate one character wide of the mark still clears
      // the threshold whenever enough members' flanking background characters
      // coincide with the anchor's. Tightening the edges inward while that
      // strictly reduces the failure count settles on the supported cut.
      for (;;) {
        ExtractedRegions tightened(z2.size());
        long long better;
        if (a + 1 <= a_range.hi && (better = evaluate(a + 1, b, tightened)) < empties) {
          ++a;
          regions.swap(tightened);
          empties = better;
          continue;
        }
        if (b - 1 >= b_range.lo && (better = evaluate(a, b - 1, tightened)) < empties) {
          --b;
          regions.swap(tightened);
          empties = better;
          continue;
        }
        break;
      }
      return regions;
    }
  }
  return std::nullopt;
}

// Column-wise plurality vote; ties go to the smallest alphabet index.
inline SymbolString voting_phase(const std::vector<SymbolString>& regions, int t) {
  if (regions.empty()) throw std::invalid_argument("voting_phase: need at least one region");
  const size_t m = regions.front().size();
  for (const auto& r : regions)
    if (r.size() != m) throw std::invalid_argument("voting_phase: regions differ in length");
  SymbolString consensus(m);
  std::vector<int> counts(static_cast<size_t>(t));
  for (size_t j = 0; j < m; ++j) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& r : regions) ++counts[r[j]];
    int best = 0;
    for (int sym = 1; sym < t; ++sym)
      if (counts[static_cast<size_t>(sym)] > counts[static_cast<size_t>(best)]) best = sym;
    consensus[j] = static_cast<uint8_t>(best);
  }
  return consensus;
}

struct RecoveryResult {
  SymbolString consensus;
  ExtractedRegions regions;               // per Z2 sequence
  std::vector<RoughBoundaries> boundaries;  // Z1 sequences first, then Z2
  WorkCounters counters;
  bool guarantee_regime = false;
};

// The full recovery flow: pairwise initial boundaries over Z1, motif length
// by median, restricted re-sampling around the anchor boundaries, collision +
// refinement against every Z2 member, extraction, and column voting. The
// first anchor whose extraction clears the threshold wins; FAILURE (nullopt)
// when no anchor does.
inline std::optional<RecoveryResult> recover_motif(const std::vector<SymbolString>& z1,
                                                   const std::vector<SymbolString>& z2,
                                                   AlgorithmType algo, const DerivedParams& p,
                                                   uint64_t seed) {
  if (z1.size() < 2 || z1.size() % 2 != 0)
    throw std::invalid_argument("recover_motif: Z1 must hold an even number (>= 2) of sequences");
  if (z2.empty()) throw std::invalid_argument("recover_motif: Z2 must not be empty");

  const int w = p.window_length();
  for (const auto& s : z1)
    if (static_cast<int>(s.size()) < w) throw std::invalid_argument("recover_motif: Z1 sequence shorter than window");

  const int k1 = static_cast<int>(z1.size()) / 2;
  const int k2 = static_cast<int>(z2.size());

  RecoveryResult res;
  res.guarantee_regime = p.guarantee_regime();
  res.boundaries.assign(z1.size() + z2.size(), RoughBoundaries{});
  WorkCounters& wc = res.counters;

  for (int i = 0; i < k1; ++i) {
    Rng rng = sub_rng(seed, 10, static_cast<uint64_t>(i));
    auto pb = initial_boundaries(z1[static_cast<size_t>(2 * i)], z1[static_cast<size_t>(2 * i + 1)],
                                 algo, p, rng, wc);
    if (pb) {
      res.boundaries[static_cast<size_t>(2 * i)] = pb->first;
      res.boundaries[static_cast<size_t>(2 * i + 1)] = pb->second;
    }
  }

  std::vector<RoughBoundaries> anchor_bounds;
  for (int i = 0; i < k1; ++i) anchor_bounds.push_back(res.boundaries[static_cast<size_t>(2 * i)]);
  int l_motif;
  try {
    l_motif = motif_length_median(anchor_bounds);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  const long long L = std::max<long long>(1, ceil_tol(static_cast<double>(l_motif) / 4.0));

  // Anchor positions are restricted to the boundary neighbourhoods; members
  // are sampled over their whole length.
  std::vector<std::vector<int>> anchor_points(static_cast<size_t>(k1));
  for (int i = 0; i < k1; ++i) {
    const RoughBoundaries& rb = anchor_bounds[static_cast<size_t>(i)];
    if (!rb.known()) continue;
    const SymbolString& s = z1[static_cast<size_t>(2 * i)];
    int last = detail::last_window_start(s, w);
    std::vector<Interval> ivs;
    Interval left = detail::clip({static_cast<int>(*rb.left - 2 * L), static_cast<int>(*rb.left + 2 * L)}, 1, last);
    Interval right = detail::clip({static_cast<int>(*rb.right - 2 * L), static_cast<int>(*rb.right + 2 * L)}, 1, last);
    if (left.lo <= left.hi) ivs.push_back(left);
    if (right.lo <= right.hi) ivs.push_back(right);
    Rng rng = sub_rng(seed, 20, static_cast<uint64_t>(i));
    anchor_points[static_cast<size_t>(i)] = point_selection(s, L, ivs, algo, p, rng, wc);
  }
  std::vector<std::vector<int>> member_points(static_cast<size_t>(k2));
  for (int j = 0; j < k2; ++j) {
    const SymbolString& s = z2[static_cast<size_t>(j)];
    if (static_cast<int>(s.size()) < w) continue;
    std::vector<Interval> full = {{1, detail::last_window_start(s, w)}};
    Rng rng = sub_rng(seed, 30, static_cast<uint64_t>(j));
    member_points[static_cast<size_t>(j)] = point_selection(s, L, full, algo, p, rng, wc);
  }

  const double omega = omega_for(algo, p);
  for (int i = 0; i < k1; ++i) {
    const RoughBoundaries& anchor_rb = anchor_bounds[static_cast<size_t>(i)];
    if (!anchor_rb.known() || anchor_points[static_cast<size_t>(i)].empty()) continue;
    const SymbolString& anchor = z1[static_cast<size_t>(2 * i)];

    for (int j = 0; j < k2; ++j) {
      const SymbolString& member = z2[static_cast<size_t>(j)];
      if (member_points[static_cast<size_t>(j)].empty()) continue;
      CollisionAnchors c = collision_detection(anchor, anchor_points[static_cast<size_t>(i)], member,
                                               member_points[static_cast<size_t>(j)], omega, p, wc);
      if (!c.found()) continue;
      ImprovedAnchors ia =
          improve_boundaries(anchor, *c.a_min, *c.a_max, member, *c.b_min, *c.b_max, 2 * L, p, wc);
      res.boundaries[z1.size() + static_cast<size_t>(j)] = detail::to_boundaries(ia.b_left, ia.b_right, w);
    }

    std::vector<RoughBoundaries> member_rb(res.boundaries.begin() + static_cast<long>(z1.size()),
                                           res.boundaries.end());
    auto extracted = extract_phase(anchor, anchor_rb, z2, member_rb, p, wc);
    if (!extracted) continue;

    // Voting accepts regions of one length; keep the plurality length (ties
    // to the shorter) and demote the rest.
    std::vector<int> lengths;
    for (const auto& r : *extracted)
      if (r) lengths.push_back(r->hi - r->lo + 1);
    if (lengths.empty()) continue;
    std::sort(lengths.begin(), lengths.end());
    int best_len = lengths.front(), best_count = 0;
    for (size_t a = 0; a < lengths.size();) {
      size_t b = a;
      while (b < lengths.size() && lengths[b] == lengths[a]) ++b;
      if (static_cast<int>(b - a) > best_count) {
        best_count = static_cast<int>(b - a);
        best_len = lengths[a];
      }
      a = b;
    }
    std::vector<SymbolString> votes;
    for (auto& r : *extracted) {
      if (r && r->hi - r->lo + 1 == best_len) {
        const SymbolString& s = z2[static_cast<size_t>(&r - extracted->data())];
        votes.emplace_back(s.begin() + (r->lo - 1), s.begin() + r->hi);
      } else {
        r = std::nullopt;
      }
    }
    res.consensus = voting_phase(votes, p.t);
    res.regions = std::move(*extracted);
    return res;
  }
  return std::nullopt;
}

}  // namespace motifvote

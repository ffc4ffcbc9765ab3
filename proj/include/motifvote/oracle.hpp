#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "motifvote/alphabet.hpp"
#include "motifvote/params.hpp"
#include "motifvote/pipeline.hpp"
#include "motifvote/rng.hpp"

namespace motifvote {

enum class OracleMode { Auto, ForceHeuristic };

struct OracleResult {
  SymbolString consensus;
  std::vector<int> offsets;  // 1-based window start per sequence
  long long cost = 0;        // total Hamming distance to the consensus
  bool exact = false;        // EXACT enumeration vs HEURISTIC descent
};

namespace oracle_detail {

// Cost of a fixed offset vector: vote each column, charge the minority.
inline long long vote_cost(const std::vector<SymbolString>& z, const std::vector<int>& offsets, int m,
                           int t, SymbolString* consensus_out) {
  long long cost = 0;
  std::vector<int> counts(static_cast<size_t>(t));
  if (consensus_out) consensus_out->assign(static_cast<size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    std::fill(counts.begin(), counts.end(), 0);
    for (size_t i = 0; i < z.size(); ++i) ++counts[z[i][static_cast<size_t>(offsets[i] - 1 + j)]];
    int best = 0;
    for (int sym = 1; sym < t; ++sym)
      if (counts[static_cast<size_t>(sym)] > counts[static_cast<size_t>(best)]) best = sym;
    cost += static_cast<long long>(z.size()) - counts[static_cast<size_t>(best)];
    if (consensus_out) (*consensus_out)[static_cast<size_t>(j)] = static_cast<uint8_t>(best);
  }
  return cost;
}

}  // namespace oracle_detail

// Reference consensus search: the window of length m in each sequence plus the
// column-voted string minimizing total Hamming distance. Joint enumeration
// when the offset space is small enough (ties resolved to the lexicographically
// smallest offset vector), otherwise coordinate descent from 50 seeded random
// restarts, labeled HEURISTIC.
inline OracleResult brute_force_consensus(const std::vector<SymbolString>& z, int m, int t,
                                          uint64_t seed = 1, OracleMode mode = OracleMode::Auto) {
  if (z.empty()) throw std::invalid_argument("brute_force_consensus: no sequences");
  if (m < 1) throw std::invalid_argument("brute_force_consensus: motif length must be positive");
  for (const auto& s : z)
    if (static_cast<int>(s.size()) < m)
      throw std::invalid_argument("brute_force_consensus: motif longer than a sequence");

  const size_t k = z.size();
  std::vector<int> ranges(k);
  double space = 1.0;
  for (size_t i = 0; i < k; ++i) {
    ranges[i] = static_cast<int>(z[i].size()) - m + 1;
    space *= static_cast<double>(ranges[i]);
  }

  OracleResult best;
  if (mode == OracleMode::Auto && space <= 1e7) {
    std::vector<int> offsets(k, 1);
    best.cost = -1;
    for (;;) {
      long long cost = oracle_detail::vote_cost(z, offsets, m, t, nullptr);
      if (best.cost < 0 || cost < best.cost) {
        best.cost = cost;
        best.offsets = offsets;
      }
      // Odometer in lexicographic order; strict improvement keeps the
      // lexicographically smallest optimum.
      size_t i = k;
      while (i > 0) {
        --i;
        if (offsets[i] < ranges[i]) {
          ++offsets[i];
          std::fill(offsets.begin() + static_cast<long>(i) + 1, offsets.end(), 1);
          break;
        }
        if (i == 0) {
          oracle_detail::vote_cost(z, best.offsets, m, t, &best.consensus);
          best.exact = true;
          return best;
        }
      }
    }
  }

  // Coordinate descent: re-optimize one offset at a time until a full cycle
  // leaves the vector unchanged.
  best.cost = -1;
  for (int restart = 0; restart < 50; ++restart) {
    Rng rng = sub_rng(seed, 40, static_cast<uint64_t>(restart));
    std::vector<int> offsets(k);
    for (size_t i = 0; i < k; ++i) offsets[i] = 1 + rng.below_int(ranges[i]);
    long long cost = oracle_detail::vote_cost(z, offsets, m, t, nullptr);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < k; ++i) {
        const int original = offsets[i];
        int best_off = original;
        long long best_cost = cost;
        for (int off = 1; off <= ranges[i]; ++off) {
          if (off == original) continue;
          offsets[i] = off;
          long long c = oracle_detail::vote_cost(z, offsets, m, t, nullptr);
          // Accept strictly better cost, or an equal cost at a smaller
          // offset; both strictly decrease (cost, offsets) lexicographically,
          // so the descent terminates.
          if (c < best_cost || (c == best_cost && off < best_off)) {
            best_cost = c;
            best_off = off;
          }
        }
        offsets[i] = best_off;
        cost = best_cost;
        if (best_off != original) changed = true;
      }
    }
    if (best.cost < 0 || cost < best.cost ||
        (cost == best.cost && std::lexicographical_compare(offsets.begin(), offsets.end(),
                                                           best.offsets.begin(), best.offsets.end()))) {
      best.cost = cost;
      best.offsets = offsets;
    }
  }
  oracle_detail::vote_cost(z, best.offsets, m, t, &best.consensus);
  best.exact = false;
  return best;
}

// All-pairs reference for collision_detection; same contract, independent
// code path (plain nested scan, full mismatch counts).
inline CollisionAnchors exhaustive_boundary_oracle(const SymbolString& s1, const SymbolString& s2,
                                                   double omega, const DerivedParams& p) {
  if (static_cast<double>(s1.size()) * static_cast<double>(s2.size()) > 1e7)
    throw std::runtime_error("exhaustive_boundary_oracle: instance too large");
  const int w = p.window_length();
  CollisionAnchors res;
  if (static_cast<int>(s1.size()) < w || static_cast<int>(s2.size()) < w) return res;
  const int last1 = static_cast<int>(s1.size()) - w + 1;
  const int last2 = static_cast<int>(s2.size()) - w + 1;
  const int cutoff = mismatch_cutoff(omega, w);
  for (int a = 1; a <= last1; ++a) {
    for (int b = 1; b <= last2; ++b) {
      int mis = 0;
      for (int i = 0; i < w; ++i) mis += (s1[static_cast<size_t>(a - 1 + i)] != s2[static_cast<size_t>(b - 1 + i)]);
      if (mis <= cutoff) {
        if (!res.a_min || a < *res.a_min) res.a_min = a;
        if (!res.a_max || a > *res.a_max) res.a_max = a;
        if (!res.b_min || b < *res.b_min) res.b_min = b;
        if (!res.b_max || b > *res.b_max) res.b_max = b;
      }
    }
  }
  return res;
}

}  // namespace motifvote

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "motifvote/alphabet.hpp"
#include "motifvote/hamming.hpp"
#include "motifvote/rng.hpp"

namespace motifvote {

// Fraction of positions where two equal-length strings differ.
inline double rel_hamming(const SymbolString& s1, const SymbolString& s2) {
  if (s1.size() != s2.size() || s1.empty())
    throw std::invalid_argument("rel_hamming: strings must have equal, non-zero length");
  int mis = mismatch_count(s1.data(), s2.data(), static_cast<int>(s1.size()));
  return static_cast<double>(mis) / static_cast<double>(s1.size());
}

// min(|i1-i2|, |j1-j2|) for intervals [i1,j1], [i2,j2].
inline long long shift_distance(long long i1, long long j1, long long i2, long long j2) {
  if (i1 > j1 || i2 > j2) throw std::invalid_argument("shift_distance: malformed interval");
  return std::min(std::llabs(i1 - i2), std::llabs(j1 - j2));
}

enum class PlantModel { Theta, Psi };

enum class Placement { Uniform, Fixed };

// Replacement hook for worst-case mutation tests: given the motif-relative
// position and the original symbol, returns the planted symbol. Returning the
// original leaves the position unmutated.
using ReplacementFn = std::function<uint8_t(int motif_pos, uint8_t original, Rng& rng)>;

struct PlantConfig {
  double alpha = 0.0;                // Theta: per-character mutation probability
  PlantModel model = PlantModel::Theta;
  int kappa = 2;                     // Psi: number of mutated positions
  Placement placement = Placement::Uniform;
  int fixed_pos = 1;                 // 1-based motif start when placement is Fixed
  const ReplacementFn* replacement = nullptr;  // optional adversarial hook (Theta)
};

// A generated sequence together with its ground truth. Positions are 1-based
// inclusive; `mutated` holds motif-relative positions where the planted copy
// differs from the motif.
struct PlantedSequence {
  SymbolString seq;
  int lb = 0;
  int rb = 0;
  std::vector<int> mutated;
};

inline PlantedSequence generate_planted(Rng& rng, int n, const SymbolString& motif, double alpha,
                                        int t, const PlantConfig* config = nullptr) {
  PlantConfig def;
  def.alpha = alpha;
  const PlantConfig& cfg = config ? *config : def;

  const int m = static_cast<int>(motif.size());
  if (m < 1 || m > n) throw std::invalid_argument("generate_planted: motif must fit in the sequence");
  if (cfg.alpha < 0.0 || cfg.alpha >= 1.0) throw std::invalid_argument("generate_planted: alpha in [0,1)");
  if (cfg.model == PlantModel::Psi && cfg.kappa < 0)
    throw std::invalid_argument("generate_planted: kappa must be non-negative");

  PlantedSequence out;
  out.seq.resize(static_cast<size_t>(n));

  int start;
  if (cfg.placement == Placement::Fixed) {
    if (cfg.fixed_pos < 1 || cfg.fixed_pos > n - m + 1)
      throw std::invalid_argument("generate_planted: fixed position out of range");
    start = cfg.fixed_pos;
  } else {
    start = 1 + rng.below_int(n - m + 1);
  }
  out.lb = start;
  out.rb = start + m - 1;

  for (int i = 0; i < n; ++i) out.seq[static_cast<size_t>(i)] = static_cast<uint8_t>(rng.below_int(t));

  auto different_symbol = [&](uint8_t g) {
    int r = rng.below_int(t - 1);
    return static_cast<uint8_t>(r < g ? r : r + 1);
  };

  if (cfg.model == PlantModel::Theta) {
    for (int i = 0; i < m; ++i) {
      uint8_t g = motif[static_cast<size_t>(i)];
      uint8_t b = g;
      if (cfg.alpha > 0.0 && rng.bernoulli(cfg.alpha))
        b = cfg.replacement ? (*cfg.replacement)(i + 1, g, rng) : different_symbol(g);
      out.seq[static_cast<size_t>(start - 1 + i)] = b;
      if (b != g) out.mutated.push_back(i + 1);
    }
  } else {
    for (int i = 0; i < m; ++i) out.seq[static_cast<size_t>(start - 1 + i)] = motif[static_cast<size_t>(i)];
    int count = std::min(cfg.kappa, m);
    std::vector<int> positions = sample_without_replacement(rng, 1, m, count);
    for (int pos : positions) {
      uint8_t g = motif[static_cast<size_t>(pos - 1)];
      out.seq[static_cast<size_t>(start - 1 + pos - 1)] = different_symbol(g);
      out.mutated.push_back(pos);
    }
  }
  return out;
}

}  // namespace motifvote

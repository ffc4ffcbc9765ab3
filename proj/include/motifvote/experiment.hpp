#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "motifvote/genmodel.hpp"
#include "motifvote/hamming.hpp"
#include "motifvote/params.hpp"
#include "motifvote/pipeline.hpp"
#include "motifvote/rng.hpp"

namespace motifvote {

struct ExperimentConfig {
  int trials = 1;
  int n = 600;
  int k = 20;
  int motif_len = 15;
  double alpha = 0.0;
  AlgorithmType algo = AlgorithmType::DeterministicSuperquadratic;
  uint64_t seed = 1;
  int t = 4;
  int x = 10;
  ParamOverrides overrides;
  int restarts = 1;  // keep the lowest-alignment-cost consensus over reruns
};

struct TrialRow {
  int trial = 0;
  bool exact = false;
  int mismatches = 0;
  bool failed = false;
  double wall_ms = 0.0;
  WorkCounters counters;
};

struct ExperimentReport {
  std::vector<TrialRow> rows;
  double accuracy_pct = 0.0;
  double mean_mismatches = 0.0;
  WorkCounters mean_counters;
  double total_wall_ms = 0.0;
};

// Best sliding-window alignment cost of `consensus` against every sequence.
inline long long consensus_alignment_cost(const std::vector<SymbolString>& z,
                                          const SymbolString& consensus) {
  long long total = 0;
  const int m = static_cast<int>(consensus.size());
  for (const auto& s : z) {
    if (static_cast<int>(s.size()) < m) {
      total += m;
      continue;
    }
    int best = m;
    for (int off = 0; off + m <= static_cast<int>(s.size()); ++off)
      best = std::min(best, mismatch_count(s.data() + off, consensus.data(), m));
    total += best;
  }
  return total;
}

// Z1 takes floor(k/4) pairs, the rest is Z2, keeping the two groups of the
// same order.
inline int z1_pair_count(int k) { return k / 4; }

// One seeded trial: fresh motif, fresh planted dataset, recovery, scoring
// against the generator's motif. The pipeline only ever sees the sequences.
inline TrialRow run_accuracy_trial(const ExperimentConfig& cfg, int trial) {
  if (cfg.k < 4) throw std::invalid_argument("accuracy experiment needs k >= 4");
  TrialRow row;
  row.trial = trial;

  uint64_t master = mix_seed(cfg.seed, static_cast<uint64_t>(trial));
  Rng gen_rng = sub_rng(master, 1);

  SymbolString motif(static_cast<size_t>(cfg.motif_len));
  for (auto& s : motif) s = static_cast<uint8_t>(gen_rng.below_int(cfg.t));

  const int k1 = z1_pair_count(cfg.k);
  std::vector<SymbolString> z1, z2;
  for (int i = 0; i < cfg.k; ++i) {
    Rng seq_rng = sub_rng(master, 2, static_cast<uint64_t>(i));
    PlantedSequence ps = generate_planted(seq_rng, cfg.n, motif, cfg.alpha, cfg.t);
    if (i < 2 * k1)
      z1.push_back(std::move(ps.seq));
    else
      z2.push_back(std::move(ps.seq));
  }

  ParamOverrides ov = cfg.overrides;
  if (!ov.alpha) ov.alpha = cfg.alpha;
  DerivedParams params = derive_and_validate_params(cfg.t, cfg.x, ov, cfg.n);

  auto t0 = std::chrono::steady_clock::now();
  std::optional<RecoveryResult> best;
  long long best_cost = -1;
  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    auto res = recover_motif(z1, z2, cfg.algo, params, mix_seed(master, 100 + static_cast<uint64_t>(r)));
    if (!res) continue;
    long long cost = cfg.restarts > 1 ? consensus_alignment_cost(z2, res->consensus) : 0;
    if (!best || cost < best_cost) {
      best_cost = cost;
      row.counters = res->counters;
      best = std::move(res);
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (!best) {
    row.failed = true;
    row.mismatches = cfg.motif_len;
    return row;
  }
  if (best->consensus.size() == motif.size()) {
    row.mismatches = mismatch_count(best->consensus.data(), motif.data(), cfg.motif_len);
    row.exact = row.mismatches == 0;
  } else {
    row.mismatches = cfg.motif_len;
  }
  return row;
}

inline ExperimentReport run_accuracy_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("accuracy experiment needs trials >= 1");
  ExperimentReport report;
  long long mism = 0;
  WorkCounters sums;
  int exact = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialRow row = run_accuracy_trial(cfg, trial);
    exact += row.exact;
    mism += row.mismatches;
    sums.positions_sampled += row.counters.positions_sampled;
    sums.window_comparisons += row.counters.window_comparisons;
    sums.character_comparisons += row.counters.character_comparisons;
    report.total_wall_ms += row.wall_ms;
    report.rows.push_back(row);
  }
  report.accuracy_pct = 100.0 * exact / cfg.trials;
  report.mean_mismatches = static_cast<double>(mism) / cfg.trials;
  report.mean_counters.positions_sampled = sums.positions_sampled / cfg.trials;
  report.mean_counters.window_comparisons = sums.window_comparisons / cfg.trials;
  report.mean_counters.character_comparisons = sums.character_comparisons / cfg.trials;
  return report;
}

// The TSV keeps only the seed-determined columns so a rerun with the same
// configuration reproduces the file byte for byte; wall time is reported in
// the run summary instead.
inline void write_accuracy_report_tsv(std::ostream& out, const ExperimentReport& report) {
  out << "trial\texact\tmismatches\tpositions_sampled\twindow_comparisons\tcharacter_comparisons\n";
  for (const auto& row : report.rows) {
    out << row.trial << '\t' << (row.exact ? 1 : 0) << '\t' << row.mismatches << '\t'
        << row.counters.positions_sampled << '\t' << row.counters.window_comparisons << '\t'
        << row.counters.character_comparisons << '\n';
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "# accuracy_pct\t%.2f\n", report.accuracy_pct);
  out << buf;
  std::snprintf(buf, sizeof(buf), "# mean_mismatches\t%.4f\n", report.mean_mismatches);
  out << buf;
}

struct ScalingConfig {
  std::vector<long long> ns;  // >= 4 values, geometric spacing
  int seeds = 5;
  AlgorithmType algo = AlgorithmType::RandomizedSublinear;
  uint64_t seed = 1;
  int t = 4;
  int x = 10;
  ParamOverrides overrides;
};

struct ScalingRow {
  long long n = 0;
  int seed = 0;
  int motif_len = 0;
  WorkCounters counters;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  double slope_positions = 0.0;
  double slope_windows = 0.0;
  double slope_preprocessing = 0.0;  // positions_sampled + window_comparisons
};

namespace detail {

// Least-squares slope of log2(y) against log2(n) over per-n means.
inline double loglog_slope(const std::vector<std::pair<long long, double>>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [n, y] : points) {
    double x = std::log2(static_cast<double>(n));
    double ly = std::log2(std::max(1.0, y));
    sx += x;
    sy += ly;
    sxx += x * x;
    sxy += x * ly;
  }
  double c = static_cast<double>(points.size());
  return (c * sxy - sx * sy) / (c * sxx - sx * sx);
}

}  // namespace detail

// Boundary-detection work against instance size: for each n a planted pair
// with |G| = ceil(n^(2/5)) and alpha = 1/|G| goes through initial_boundaries
// and the counters are recorded, then the per-n means are fitted in log-log.
inline ScalingReport run_scaling_benchmark(const ScalingConfig& cfg) {
  if (cfg.ns.size() < 4) throw std::invalid_argument("scaling benchmark needs >= 4 values of n");
  ScalingReport report;
  std::vector<std::pair<long long, double>> pts_positions, pts_windows, pts_pre;

  for (long long n : cfg.ns) {
    int motif_len = static_cast<int>(ceil_tol(std::pow(static_cast<double>(n), 0.4)));
    double alpha = 1.0 / motif_len;
    ParamOverrides ov = cfg.overrides;
    if (!ov.alpha) ov.alpha = alpha;
    DerivedParams params = derive_and_validate_params(cfg.t, cfg.x, ov, n);

    double mean_positions = 0, mean_windows = 0, mean_pre = 0;
    for (int s = 0; s < cfg.seeds; ++s) {
      uint64_t master = mix_seed(cfg.seed, mix_seed(static_cast<uint64_t>(n), static_cast<uint64_t>(s)));
      Rng gen_rng = sub_rng(master, 1);
      SymbolString motif(static_cast<size_t>(motif_len));
      for (auto& sym : motif) sym = static_cast<uint8_t>(gen_rng.below_int(cfg.t));
      Rng r1 = sub_rng(master, 2, 0);
      Rng r2 = sub_rng(master, 2, 1);
      PlantedSequence s1 = generate_planted(r1, static_cast<int>(n), motif, alpha, cfg.t);
      PlantedSequence s2 = generate_planted(r2, static_cast<int>(n), motif, alpha, cfg.t);

      ScalingRow row;
      row.n = n;
      row.seed = s;
      row.motif_len = motif_len;
      Rng run_rng = sub_rng(master, 3);
      initial_boundaries(s1.seq, s2.seq, cfg.algo, params, run_rng, row.counters);
      report.rows.push_back(row);
      mean_positions += static_cast<double>(row.counters.positions_sampled);
      mean_windows += static_cast<double>(row.counters.window_comparisons);
      mean_pre += static_cast<double>(row.counters.preprocessing_work());
    }
    pts_positions.emplace_back(n, mean_positions / cfg.seeds);
    pts_windows.emplace_back(n, mean_windows / cfg.seeds);
    pts_pre.emplace_back(n, mean_pre / cfg.seeds);
  }
  report.slope_positions = detail::loglog_slope(pts_positions);
  report.slope_windows = detail::loglog_slope(pts_windows);
  report.slope_preprocessing = detail::loglog_slope(pts_pre);
  return report;
}

inline void write_scaling_report_tsv(std::ostream& out, const ScalingReport& report) {
  out << "n\tseed\tmotif_len\tpositions_sampled\twindow_comparisons\tcharacter_comparisons\n";
  for (const auto& row : report.rows) {
    out << row.n << '\t' << row.seed << '\t' << row.motif_len << '\t' << row.counters.positions_sampled
        << '\t' << row.counters.window_comparisons << '\t' << row.counters.character_comparisons << '\n';
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "# slope_positions_sampled\t%.4f\n", report.slope_positions);
  out << buf;
  std::snprintf(buf, sizeof(buf), "# slope_window_comparisons\t%.4f\n", report.slope_windows);
  out << buf;
  std::snprintf(buf, sizeof(buf), "# slope_preprocessing_work\t%.4f\n", report.slope_preprocessing);
  out << buf;
}

}  // namespace motifvote

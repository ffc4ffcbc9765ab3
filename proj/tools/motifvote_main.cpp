// Command-line front end: dataset generation, motif recovery, the accuracy
// and scaling benchmarks, and the brute-force oracle.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "motifvote/experiment.hpp"
#include "motifvote/io.hpp"
#include "motifvote/oracle.hpp"
#include "motifvote/params.hpp"
#include "motifvote/pipeline.hpp"

namespace {

using namespace motifvote;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

RunConfig load_config(const std::string& path) {
  if (path.empty()) return RunConfig{};
  return parse_config_file(path);
}

int cmd_gen(const std::string& config_path, uint64_t seed, const std::string& out_prefix,
            const std::string& alphabet_str, int n, int k, int motif_len, const std::string& motif_str,
            double alpha, const std::string& model, int kappa) {
  Alphabet alphabet(alphabet_str);
  RunConfig cfg = load_config(config_path);
  uint64_t master = cfg.seed.value_or(seed);

  Rng motif_rng = sub_rng(master, 1);
  SymbolString motif;
  if (!motif_str.empty()) {
    motif = alphabet.encode(motif_str);
  } else {
    motif.resize(static_cast<size_t>(motif_len));
    for (auto& s : motif) s = static_cast<uint8_t>(motif_rng.below_int(alphabet.size()));
  }

  PlantConfig pc;
  pc.alpha = alpha;
  pc.kappa = kappa;
  pc.model = model == "psi" ? PlantModel::Psi : PlantModel::Theta;

  std::vector<FastaRecord> records;
  std::vector<std::string> ids;
  std::vector<PlantedSequence> planted;
  for (int i = 0; i < k; ++i) {
    Rng rng = sub_rng(master, 2, static_cast<uint64_t>(i));
    PlantedSequence ps = generate_planted(rng, n, motif, alpha, alphabet.size(), &pc);
    std::string id = "seq" + std::to_string(i + 1);
    records.push_back({id, ps.seq});
    ids.push_back(id);
    planted.push_back(std::move(ps));
  }

  write_fasta(out_prefix + ".fasta", records, alphabet);
  auto truth = open_out(out_prefix + ".truth.tsv");
  write_ground_truth_tsv(truth, ids, planted);
  write_fasta(out_prefix + ".motif.fasta", {{"motif", motif}}, alphabet);
  std::cout << "wrote " << out_prefix << ".fasta, " << out_prefix << ".truth.tsv, " << out_prefix
            << ".motif.fasta\n";
  return 0;
}

int cmd_recover(const std::string& config_path, std::optional<uint64_t> seed_flag,
                const std::string& out_prefix, const std::string& alphabet_str,
                const std::string& algo_flag, const std::string& input, int restarts) {
  Alphabet alphabet(alphabet_str);
  RunConfig cfg = load_config(config_path);
  uint64_t seed = seed_flag.value_or(cfg.seed.value_or(1));

  AlgorithmType algo = AlgorithmType::DeterministicSuperquadratic;
  if (!algo_flag.empty()) {
    auto parsed = algorithm_from_string(algo_flag);
    if (!parsed) throw ParseError("unknown --algo '" + algo_flag + "'");
    algo = *parsed;
  } else if (cfg.algorithm_type) {
    algo = *cfg.algorithm_type;
  }

  std::vector<FastaRecord> records = read_fasta(input, alphabet);
  long long n = 0;
  for (const auto& r : records) n = std::max<long long>(n, static_cast<long long>(r.seq.size()));
  DerivedParams params = derive_and_validate_params(alphabet.size(), cfg.x, cfg.overrides, n);
  if (!params.guarantee_regime())
    std::cerr << "note: configuration is outside the guarantee regime (" << params.violations.size()
              << " constraint(s) violated)\n";

  const int k = static_cast<int>(records.size());
  if (k < 4) throw std::runtime_error("recover needs at least 4 sequences");
  const int k1 = z1_pair_count(k);
  std::vector<SymbolString> z1, z2;
  std::vector<std::string> z2_ids;
  for (int i = 0; i < k; ++i) {
    if (i < 2 * k1) {
      z1.push_back(records[static_cast<size_t>(i)].seq);
    } else {
      z2.push_back(records[static_cast<size_t>(i)].seq);
      z2_ids.push_back(records[static_cast<size_t>(i)].id);
    }
  }

  std::optional<RecoveryResult> best;
  long long best_cost = -1;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    auto res = recover_motif(z1, z2, algo, params, mix_seed(seed, static_cast<uint64_t>(r)));
    if (!res) continue;
    long long cost = consensus_alignment_cost(z2, res->consensus);
    if (!best || cost < best_cost) {
      best_cost = cost;
      best = std::move(res);
    }
  }

  if (!best) {
    std::cerr << "recovery FAILURE: no anchor produced an accepted candidate\n";
    return 1;
  }
  write_fasta(out_prefix + ".consensus.fasta", {{"consensus", best->consensus}}, alphabet);
  auto tsv = open_out(out_prefix + ".boundaries.tsv");
  write_boundaries_tsv(tsv, z2_ids, best->regions);
  std::cout << "consensus " << alphabet.decode(best->consensus) << '\n'
            << "counters positions_sampled=" << best->counters.positions_sampled
            << " window_comparisons=" << best->counters.window_comparisons
            << " character_comparisons=" << best->counters.character_comparisons << '\n';
  return 0;
}

int cmd_bench_accuracy(const std::string& config_path, uint64_t seed, const std::string& out_path,
                       int trials, int n, int k, int motif_len, double alpha,
                       const std::string& algo_flag, int restarts) {
  RunConfig cfg = load_config(config_path);
  ExperimentConfig ec;
  ec.trials = trials;
  ec.n = n;
  ec.k = k;
  ec.motif_len = motif_len;
  ec.alpha = alpha >= 0 ? alpha : 1.0 / motif_len;
  ec.seed = cfg.seed.value_or(seed);
  ec.t = cfg.t;
  ec.x = cfg.x;
  ec.overrides = cfg.overrides;
  ec.restarts = restarts;
  auto parsed = algorithm_from_string(algo_flag);
  if (!parsed) throw ParseError("unknown --algo '" + algo_flag + "'");
  ec.algo = *parsed;

  ExperimentReport report = run_accuracy_experiment(ec);
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    write_accuracy_report_tsv(out, report);
  }
  std::printf("trials=%d accuracy=%.2f%% mean_mismatches=%.4f wall=%.0fms\n", trials,
              report.accuracy_pct, report.mean_mismatches, report.total_wall_ms);
  return 0;
}

int cmd_bench_scaling(const std::string& config_path, uint64_t seed, const std::string& out_path,
                      const std::vector<long long>& ns, int seeds, const std::string& algo_flag) {
  RunConfig cfg = load_config(config_path);
  ScalingConfig sc;
  sc.ns = ns;
  sc.seeds = seeds;
  sc.seed = cfg.seed.value_or(seed);
  sc.t = cfg.t;
  sc.x = cfg.x;
  sc.overrides = cfg.overrides;
  auto parsed = algorithm_from_string(algo_flag);
  if (!parsed) throw ParseError("unknown --algo '" + algo_flag + "'");
  sc.algo = *parsed;

  ScalingReport report = run_scaling_benchmark(sc);
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    write_scaling_report_tsv(out, report);
  }
  std::printf("slope positions_sampled=%.4f window_comparisons=%.4f preprocessing_work=%.4f\n",
              report.slope_positions, report.slope_windows, report.slope_preprocessing);
  return 0;
}

int cmd_oracle(const std::string& out_path, const std::string& alphabet_str, int motif_len,
               uint64_t seed, const std::string& input) {
  Alphabet alphabet(alphabet_str);
  std::vector<FastaRecord> records = read_fasta(input, alphabet);
  std::vector<SymbolString> z;
  for (const auto& r : records) z.push_back(r.seq);
  OracleResult res = brute_force_consensus(z, motif_len, alphabet.size(), seed);
  std::cout << (res.exact ? "EXACT" : "HEURISTIC") << " cost=" << res.cost << " consensus="
            << alphabet.decode(res.consensus) << '\n';
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    out << "seq_id\toffset\n";
    for (size_t i = 0; i < records.size(); ++i) out << records[i].id << '\t' << res.offsets[i] << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planted-motif toolkit: generation, recovery, oracle, benchmarks"};
  app.require_subcommand(1);

  std::string config_path, out = "out", alphabet = "ACGT", motif_str, model = "theta";
  std::string algo = "deterministic", input;
  uint64_t seed = 1;
  int n = 600, k = 20, motif_len = 15, kappa = 2, trials = 50, restarts = 1, seeds = 5;
  double alpha = 0.0;
  std::vector<long long> ns = {4096, 8192, 16384, 32768, 65536};

  auto* gen = app.add_subcommand("gen", "generate a planted dataset (FASTA + ground-truth TSV)");
  gen->add_option("--config", config_path, "parameter config file");
  gen->add_option("--seed", seed, "master seed");
  gen->add_option("--out", out, "output prefix");
  gen->add_option("--alphabet", alphabet, "ordered alphabet symbols");
  gen->add_option("--n", n, "sequence length");
  gen->add_option("--k", k, "number of sequences");
  gen->add_option("--motif-len", motif_len, "motif length (random motif)");
  gen->add_option("--motif", motif_str, "explicit motif string");
  gen->add_option("--alpha", alpha, "per-character mutation probability");
  gen->add_option("--model", model, "theta | psi");
  gen->add_option("--kappa", kappa, "psi: number of mutated positions");

  auto* rec = app.add_subcommand("recover", "recover the motif from a FASTA file");
  std::optional<uint64_t> seed_flag;
  rec->add_option("--config", config_path, "parameter config file");
  rec->add_option("--seed", seed_flag, "master seed");
  rec->add_option("--out", out, "output prefix");
  rec->add_option("--alphabet", alphabet, "ordered alphabet symbols");
  rec->add_option("--algo", algo, "sublinear | subquadratic | deterministic");
  rec->add_option("--restarts", restarts, "reruns, keeping the lowest-cost consensus");
  rec->add_option("input", input, "input FASTA")->required();

  auto* bench = app.add_subcommand("bench", "benchmarks");
  bench->require_subcommand(1);
  auto* acc = bench->add_subcommand("accuracy", "seeded accuracy trials");
  acc->add_option("--config", config_path, "parameter config file");
  acc->add_option("--seed", seed, "master seed");
  acc->add_option("--out", out, "report TSV path");
  acc->add_option("--trials", trials, "number of trials");
  acc->add_option("--n", n, "sequence length");
  acc->add_option("--k", k, "number of sequences");
  acc->add_option("--motif-len", motif_len, "motif length");
  double acc_alpha = -1.0;
  acc->add_option("--alpha", acc_alpha, "mutation rate (default 1/motif_len)");
  acc->add_option("--algo", algo, "sublinear | subquadratic | deterministic");
  acc->add_option("--restarts", restarts, "reruns per trial");

  auto* scal = bench->add_subcommand("scaling", "work-counter scaling sweep");
  scal->add_option("--config", config_path, "parameter config file");
  scal->add_option("--seed", seed, "master seed");
  scal->add_option("--out", out, "report TSV path");
  scal->add_option("--n-list", ns, "sweep values of n (comma separated)")->delimiter(',');
  scal->add_option("--seeds", seeds, "seeds per n");
  scal->add_option("--algo", algo, "sublinear | subquadratic | deterministic");

  auto* orc = app.add_subcommand("oracle", "brute-force consensus reference");
  orc->add_option("--out", out, "offsets TSV path");
  orc->add_option("--alphabet", alphabet, "ordered alphabet symbols");
  orc->add_option("--motif-len", motif_len, "motif length")->required();
  orc->add_option("--seed", seed, "restart seed");
  orc->add_option("input", input, "input FASTA")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed())
      return cmd_gen(config_path, seed, out, alphabet, n, k, motif_len, motif_str, alpha, model, kappa);
    if (rec->parsed())
      return cmd_recover(config_path, seed_flag, out, alphabet, algo, input, restarts);
    if (acc->parsed())
      return cmd_bench_accuracy(config_path, seed, out, trials, n, k, motif_len, acc_alpha, algo, restarts);
    if (scal->parsed()) return cmd_bench_scaling(config_path, seed, out, ns, seeds, algo);
    if (orc->parsed()) return cmd_oracle(out, alphabet, motif_len, seed, input);
  } catch (const motifvote::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "motifvote/alphabet.hpp"
#include "motifvote/genmodel.hpp"
#include "motifvote/params.hpp"
#include "motifvote/pipeline.hpp"

namespace motifvote {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FastaRecord {
  std::string id;
  SymbolString seq;
};

// FASTA reader. Accepts arbitrary line wrapping and lower-case symbols;
// rejects unknown symbols with the record id and 1-based offset.
inline std::vector<FastaRecord> read_fasta(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<FastaRecord> records;
  std::string line;
  std::string current_id;
  std::string current_seq;
  bool have_record = false;

  auto flush = [&]() {
    if (!have_record) return;
    if (current_seq.empty()) throw ParseError("record '" + current_id + "': empty sequence");
    FastaRecord rec;
    rec.id = current_id;
    try {
      rec.seq = alphabet.encode(current_seq);
    } catch (const std::invalid_argument& e) {
      throw ParseError("record '" + current_id + "': " + e.what());
    }
    records.push_back(std::move(rec));
    current_seq.clear();
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '>') {
      flush();
      std::istringstream header(line.substr(1));
      header >> current_id;
      if (current_id.empty()) throw ParseError("FASTA header without an id");
      have_record = true;
    } else {
      if (!have_record) throw ParseError("sequence data before the first FASTA header");
      current_seq += line;
    }
  }
  flush();
  if (records.empty()) throw ParseError("'" + path + "': no FASTA records");
  return records;
}

inline void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records,
                        const Alphabet& alphabet) {
  constexpr size_t kWrap = 70;
  for (const auto& rec : records) {
    out << '>' << rec.id << '\n';
    std::string text = alphabet.decode(rec.seq);
    for (size_t i = 0; i < text.size(); i += kWrap) out << text.substr(i, kWrap) << '\n';
  }
}

inline void write_fasta(const std::string& path, const std::vector<FastaRecord>& records,
                        const Alphabet& alphabet) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_fasta(out, records, alphabet);
}

// Ground-truth TSV: seq_id, 1-based inclusive boundaries, comma-separated
// motif-relative mutated positions (may be empty).
inline void write_ground_truth_tsv(std::ostream& out, const std::vector<std::string>& ids,
                                   const std::vector<PlantedSequence>& planted) {
  out << "seq_id\tlb\trb\tmutated_positions\n";
  for (size_t i = 0; i < planted.size(); ++i) {
    out << ids[i] << '\t' << planted[i].lb << '\t' << planted[i].rb << '\t';
    for (size_t j = 0; j < planted[i].mutated.size(); ++j) {
      if (j) out << ',';
      out << planted[i].mutated[j];
    }
    out << '\n';
  }
}

// Recovery output: one row per Z2 sequence, either both boundaries or EMPTY.
inline void write_boundaries_tsv(std::ostream& out, const std::vector<std::string>& ids,
                                 const ExtractedRegions& regions) {
  out << "seq_id\tleft\tright\n";
  for (size_t i = 0; i < regions.size(); ++i) {
    if (regions[i])
      out << ids[i] << '\t' << regions[i]->lo << '\t' << regions[i]->hi << '\n';
    else
      out << ids[i] << "\tEMPTY\n";
  }
}

struct RunConfig {
  int t = 4;
  int x = 10;
  ParamOverrides overrides;
  std::optional<AlgorithmType> algorithm_type;
  std::optional<uint64_t> seed;
};

// Plain-text config: one `key = value` per line. Blank lines and lines
// starting with '#' are skipped; anything else with an unknown key is an
// error naming the line.
inline RunConfig parse_config(std::istream& in, const std::string& origin = "<config>") {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed.front() == '#') continue;
    size_t eq = trimmed.find('=');
    if (eq == std::string::npos) fail("expected `key = value`");
    auto strip = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      size_t last = s.find_last_not_of(" \t");
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    std::string key = strip(trimmed.substr(0, eq));
    std::string value = strip(trimmed.substr(eq + 1));
    if (key.empty() || value.empty()) fail("expected `key = value`");

    auto as_double = [&]() {
      try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
      } catch (...) {
        fail("bad numeric value '" + value + "'");
        return 0.0;
      }
    };
    auto as_int = [&]() {
      try {
        size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
      } catch (...) {
        fail("bad integer value '" + value + "'");
        return 0LL;
      }
    };

    if (key == "t") cfg.t = static_cast<int>(as_int());
    else if (key == "x") cfg.x = static_cast<int>(as_int());
    else if (key == "epsilon") cfg.overrides.epsilon = as_double();
    else if (key == "alpha") cfg.overrides.alpha = as_double();
    else if (key == "v") cfg.overrides.v = static_cast<int>(as_int());
    else if (key == "u1") cfg.overrides.u1 = static_cast<int>(as_int());
    else if (key == "u2") cfg.overrides.u2 = static_cast<int>(as_int());
    else if (key == "d0") cfg.overrides.d0 = as_double();
    else if (key == "d1") cfg.overrides.d1 = as_double();
    else if (key == "gamma") cfg.overrides.gamma = as_double();
    else if (key == "tau") cfg.overrides.tau = as_double();
    else if (key == "window_override") cfg.overrides.window_override = static_cast<int>(as_int());
    else if (key == "algorithm_type") {
      auto algo = algorithm_from_string(value);
      if (!algo) fail("unknown algorithm_type '" + value + "'");
      cfg.algorithm_type = algo;
    } else if (key == "seed") cfg.seed = static_cast<uint64_t>(as_int());
    else fail("unknown key '" + key + "'");
  }
  return cfg;
}

inline RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_config(in, path);
}

}  // namespace motifvote

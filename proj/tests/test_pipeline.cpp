#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "motifvote/genmodel.hpp"
#include "motifvote/oracle.hpp"
#include "motifvote/pipeline.hpp"

using namespace motifvote;

namespace {

const Alphabet kDna = Alphabet::dna();

SymbolString random_string(Rng& rng, int len, int t = 4) {
  SymbolString s(static_cast<size_t>(len));
  for (auto& c : s) c = static_cast<uint8_t>(rng.below_int(t));
  return s;
}

DerivedParams desk_params(long long n, double alpha, ParamOverrides extra = {}) {
  if (!extra.alpha) extra.alpha = alpha;
  return derive_and_validate_params(4, 10, extra, n);
}

std::vector<int> all_window_starts(const SymbolString& s, int w) {
  std::vector<int> u;
  for (int a = 1; a + w - 1 <= static_cast<int>(s.size()); ++a) u.push_back(a);
  return u;
}

// The worked-example instance: two anchor sequences and five member
// sequences, each carrying one mutated copy of TTTTTAACGATTAGCS.
struct WorkedExample {
  Alphabet alphabet{"ACGST"};
  std::string motif_text = "TTTTTAACGATTAGCS";
  std::vector<std::string> z1_text = {
      "GTACCATGGATTATTAACGATTAGCSTAGAGGACCTA",
      "AATCCTTACTTTTAACGATTAGCSGTC",
  };
  std::vector<std::string> z2_text = {
      "ATTCGATCCAGTTTTTAACGGTTAGCSCAATTACTTAG",
      "GCATTGCATTTTTTAACGATTACCSGTACTTAGCTAGATC",
      "TCAGGGCATCGAGACTTTTTAGCGATTAGCSCTAGAATCAGACCT",
      "GTACCTGGCATTGAACGTTTTTAACGATTAGCATGCAGATGGACCTTTA",
      "AATGGATCAGATTTTTAACGATTCGCSCTAGATTCAG",
  };
  // 1-based motif boundaries per member sequence.
  std::vector<Interval> z2_truth = {{12, 27}, {10, 25}, {16, 31}, {18, 33}, {12, 27}};

  std::vector<SymbolString> z1, z2;
  DerivedParams params;

  // The motif carries one mutation per copy, including one at position 3 of
  // the first anchor, so the exact-prefix length v must stay below 3 and the
  // distance budget must absorb a 1/3 prefix mismatch. The window is kept
  // just under the motif length: shorter windows admit too many coincidental
  // beta-near pairs from the background at this tiny scale.
  WorkedExample()
      : params(derive_and_validate_params(5, 10,
                                          [] {
                                            ParamOverrides ov;
                                            ov.epsilon = 0.1125;
                                            ov.alpha = 0.0625;  // one expected mutation per copy
                                            ov.v = 3;
                                            ov.window_override = 14;
                                            return ov;
                                          }(),
                                          49)) {
    for (const auto& s : z1_text) z1.push_back(alphabet.encode(s));
    for (const auto& s : z2_text) z2.push_back(alphabet.encode(s));
  }
};

}  // namespace

TEST_CASE("point selection: deterministic type takes every position", "[pipeline]") {
  DerivedParams p = desk_params(600, 0.0);
  Rng rng(1);
  WorkCounters wc;
  SymbolString s = random_string(rng, 120);
  auto u = point_selection(s, 50, {{1, 100}}, AlgorithmType::DeterministicSuperquadratic, p, rng, wc);
  REQUIRE(u.size() == 100);
  REQUIRE(u.front() == 1);
  REQUIRE(u.back() == 100);
  REQUIRE(wc.positions_sampled == 100);
}

TEST_CASE("point selection: small blocks fall back to full selection", "[pipeline]") {
  DerivedParams p = desk_params(600, 0.0);
  Rng rng(2);
  WorkCounters wc;
  SymbolString s = random_string(rng, 120);
  // threshold = (log2 600)^4 / 100 = 72.5..., so L = 60 selects everything
  auto u = point_selection(s, 60, {{11, 110}}, AlgorithmType::RandomizedSublinear, p, rng, wc);
  REQUIRE(u.size() == 100);
}

TEST_CASE("point selection: per-block sample counts follow M(L)", "[pipeline]") {
  ParamOverrides ov;
  ov.gamma = 0.0;
  DerivedParams p = derive_and_validate_params(4, 10, ov, 1024);
  Rng data_rng(3);
  SymbolString s = random_string(data_rng, 8192);
  Rng rng(4);
  WorkCounters wc;
  // L = 4096 >= threshold 100; M(4096) = sqrt(40)*64*10 -> 4048 per block
  auto u = point_selection(s, 4096, {{1, 8192}}, AlgorithmType::RandomizedSublinear, p, rng, wc);
  REQUIRE(u.size() == 2 * 4048);
  REQUIRE(wc.positions_sampled == u.size());
  int first_block = 0;
  for (int pos : u) first_block += pos <= 4096;
  REQUIRE(first_block == 4048);
  REQUIRE(std::is_sorted(u.begin(), u.end()));
  REQUIRE(std::adjacent_find(u.begin(), u.end()) == u.end());
}

TEST_CASE("point selection: overlapping intervals deduplicate", "[pipeline]") {
  DerivedParams p = desk_params(600, 0.0);
  Rng rng(5);
  WorkCounters wc;
  SymbolString s = random_string(rng, 100);
  auto u = point_selection(s, 10, {{1, 50}, {40, 90}}, AlgorithmType::DeterministicSuperquadratic, p,
                           rng, wc);
  REQUIRE(u.size() == 90);
  REQUIRE(std::adjacent_find(u.begin(), u.end()) == u.end());
}

TEST_CASE("point selection: interval outside the sequence is an error", "[pipeline]") {
  DerivedParams p = desk_params(600, 0.0);
  Rng rng(6);
  WorkCounters wc;
  SymbolString s = random_string(rng, 50);
  REQUIRE_THROWS_AS(
      point_selection(s, 10, {{1, 51}}, AlgorithmType::DeterministicSuperquadratic, p, rng, wc),
      std::invalid_argument);
}

TEST_CASE("collision detection: a sequence collides with itself everywhere", "[pipeline]") {
  ParamOverrides ov;
  ov.window_override = 12;
  DerivedParams p = desk_params(200, 0.0, ov);
  Rng rng(7);
  SymbolString s = random_string(rng, 200);
  auto u = all_window_starts(s, 12);
  WorkCounters wc;
  CollisionAnchors c = collision_detection(s, u, s, u, 0.0, p, wc);
  REQUIRE(c.found());
  REQUIRE(*c.a_min == 1);
  REQUIRE(*c.b_min == 1);
  REQUIRE(*c.a_max == 189);
  REQUIRE(*c.b_max == 189);
}

TEST_CASE("collision detection: disjoint alphabets produce no anchors", "[pipeline]") {
  ParamOverrides ov;
  ov.window_override = 8;
  DerivedParams p = desk_params(64, 0.0, ov);
  SymbolString a(64, 0), c(64, 1);
  auto u1 = all_window_starts(a, 8);
  auto u2 = all_window_starts(c, 8);
  WorkCounters wc;
  CollisionAnchors res = collision_detection(a, u1, c, u2, 0.0, p, wc);
  REQUIRE_FALSE(res.found());
  REQUIRE_FALSE(res.a_max.has_value());
  REQUIRE_FALSE(res.b_min.has_value());
}

TEST_CASE("collision detection agrees with the exhaustive oracle", "[pipeline][oracle]") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    ParamOverrides ov;
    ov.window_override = 10;
    DerivedParams p = desk_params(200, 0.0, ov);
    Rng motif_rng = sub_rng(seed, 1);
    SymbolString motif = random_string(motif_rng, 40);
    Rng r1 = sub_rng(seed, 2);
    Rng r2 = sub_rng(seed, 3);
    PlantedSequence s1 = generate_planted(r1, 200, motif, 0.0, 4);
    PlantedSequence s2 = generate_planted(r2, 200, motif, 0.0, 4);
    auto u1 = all_window_starts(s1.seq, 10);
    auto u2 = all_window_starts(s2.seq, 10);
    for (double omega : {0.0, p.beta}) {
      WorkCounters wc;
      CollisionAnchors fast = collision_detection(s1.seq, u1, s2.seq, u2, omega, p, wc);
      CollisionAnchors slow = exhaustive_boundary_oracle(s1.seq, s2.seq, omega, p);
      REQUIRE(fast == slow);
      REQUIRE(fast.found());
    }
  }
}

TEST_CASE("zero-omega collisions really are identical windows", "[pipeline]") {
  ParamOverrides ov;
  ov.window_override = 10;
  DerivedParams p = desk_params(300, 0.0, ov);
  Rng motif_rng(77);
  SymbolString motif = random_string(motif_rng, 60);
  Rng r1(78), r2(79);
  PlantedSequence s1 = generate_planted(r1, 300, motif, 0.0, 4);
  PlantedSequence s2 = generate_planted(r2, 300, motif, 0.0, 4);
  auto u1 = all_window_starts(s1.seq, 10);
  auto u2 = all_window_starts(s2.seq, 10);
  WorkCounters wc;
  CollisionAnchors c = collision_detection(s1.seq, u1, s2.seq, u2, 0.0, p, wc);
  REQUIRE(c.found());
  // every returned anchor window must have an exactly identical partner
  auto has_identical_partner = [&](const SymbolString& from, int start, const SymbolString& other) {
    SymbolString win(from.begin() + start - 1, from.begin() + start - 1 + 10);
    for (int b = 1; b + 9 <= static_cast<int>(other.size()); ++b)
      if (std::equal(win.begin(), win.end(), other.begin() + b - 1)) return true;
    return false;
  };
  REQUIRE(has_identical_partner(s1.seq, *c.a_min, s2.seq));
  REQUIRE(has_identical_partner(s1.seq, *c.a_max, s2.seq));
  REQUIRE(has_identical_partner(s2.seq, *c.b_min, s1.seq));
  REQUIRE(has_identical_partner(s2.seq, *c.b_max, s1.seq));
}

namespace {

// Reference for improve_boundaries: scan the two quadrants directly.
ImprovedAnchors improve_reference(const SymbolString& s1, int a_l, int a_r, const SymbolString& s2,
                                  int f_l, int f_r, int L, const DerivedParams& p) {
  const int w = p.window_length();
  const int cutoff = mismatch_cutoff(p.beta, w);
  ImprovedAnchors out;
  auto scan = [&](int ca, int cb, bool take_min, std::optional<int>& oa, std::optional<int>& ob) {
    int alo = std::max(1, ca - L), ahi = std::min(static_cast<int>(s1.size()) - w + 1, ca + L);
    int blo = std::max(1, cb - L), bhi = std::min(static_cast<int>(s2.size()) - w + 1, cb + L);
    for (int a = alo; a <= ahi; ++a)
      for (int b = blo; b <= bhi; ++b) {
        int mis = 0;
        for (int i = 0; i < w; ++i) mis += s1[static_cast<size_t>(a - 1 + i)] != s2[static_cast<size_t>(b - 1 + i)];
        if (mis <= cutoff) {
          if (take_min) {
            if (!oa || a < *oa) oa = a;
            if (!ob || b < *ob) ob = b;
          } else {
            if (!oa || a > *oa) oa = a;
            if (!ob || b > *ob) ob = b;
          }
        }
      }
  };
  scan(a_l, f_l, true, out.a_left, out.b_left);
  scan(a_r, f_r, false, out.a_right, out.b_right);
  return out;
}

}  // namespace

TEST_CASE("improve boundaries matches an exhaustive quadrant scan", "[pipeline]") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    ParamOverrides ov;
    ov.window_override = 8;
    ov.epsilon = 0.06;
    DerivedParams p = desk_params(120, 0.0, ov);
    Rng motif_rng = sub_rng(seed, 11);
    SymbolString motif = random_string(motif_rng, 30);
    Rng r1 = sub_rng(seed, 12);
    Rng r2 = sub_rng(seed, 13);
    PlantedSequence s1 = generate_planted(r1, 120, motif, 0.0, 4);
    PlantedSequence s2 = generate_planted(r2, 120, motif, 0.0, 4);
    int L = 7;
    // rough anchors displaced by L/2 from the truth
    int a_l = s1.lb + L / 2, a_r = s1.rb - 7 - L / 2;
    int f_l = s2.lb + L / 2, f_r = s2.rb - 7 - L / 2;
    WorkCounters wc;
    ImprovedAnchors got = improve_boundaries(s1.seq, a_l, a_r, s2.seq, f_l, f_r, L, p, wc);
    ImprovedAnchors want = improve_reference(s1.seq, a_l, a_r, s2.seq, f_l, f_r, L, p);
    REQUIRE(got == want);
    // with alpha = 0 the left anchor may only drift below LB, never above
    REQUIRE(got.a_left.has_value());
    REQUIRE(*got.a_left <= s1.lb);
    REQUIRE(*got.a_left >= s1.lb - (p.v + p.u1));
    // containment in the clipped search interval
    REQUIRE(*got.a_left >= std::max(1, a_l - L));
    REQUIRE(*got.a_left <= a_l + L);

    // idempotence: feeding the optimum back returns the same anchors
    WorkCounters wc2;
    ImprovedAnchors again = improve_boundaries(s1.seq, *got.a_left, *got.a_right, s2.seq, *got.b_left,
                                               *got.b_right, L, p, wc2);
    ImprovedAnchors expect = improve_reference(s1.seq, *got.a_left, *got.a_right, s2.seq, *got.b_left,
                                               *got.b_right, L, p);
    REQUIRE(again == expect);
  }
}

TEST_CASE("improve boundaries: random instances stay inside the clipped ranges", "[pipeline]") {
  ParamOverrides ov;
  ov.window_override = 8;
  DerivedParams p = desk_params(80, 0.1, ov);
  for (int iter = 0; iter < 1000; ++iter) {
    Rng rng = sub_rng(2024, 0, static_cast<uint64_t>(iter));
    SymbolString s1 = random_string(rng, 80);
    SymbolString s2 = random_string(rng, 80);
    int a_l = 1 + rng.below_int(70), a_r = 1 + rng.below_int(70);
    int f_l = 1 + rng.below_int(70), f_r = 1 + rng.below_int(70);
    int L = 1 + rng.below_int(12);
    WorkCounters wc;
    ImprovedAnchors got = improve_boundaries(s1, a_l, a_r, s2, f_l, f_r, L, p, wc);
    if (got.a_left) {
      REQUIRE(*got.a_left >= std::max(1, a_l - L));
      REQUIRE(*got.a_left <= std::min(static_cast<int>(s1.size()) - 8 + 1, a_l + L));
    }
    if (got.a_right) {
      REQUIRE(*got.a_right >= std::max(1, a_r - L));
      REQUIRE(*got.a_right <= std::min(static_cast<int>(s1.size()) - 8 + 1, a_r + L));
    }
    if (got.b_left) REQUIRE(*got.b_left >= std::max(1, f_l - L));
    if (got.b_right) REQUIRE(*got.b_right <= std::min(static_cast<int>(s2.size()) - 8 + 1, f_r + L));
  }
}

TEST_CASE("initial boundaries find a planted motif without mutations", "[pipeline]") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    DerivedParams p = desk_params(600, 0.0);  // w = 19
    Rng motif_rng = sub_rng(seed, 21);
    SymbolString motif = random_string(motif_rng, 120);  // >= n^(2/5)
    Rng r1 = sub_rng(seed, 22);
    Rng r2 = sub_rng(seed, 23);
    PlantedSequence s1 = generate_planted(r1, 600, motif, 0.0, 4);
    PlantedSequence s2 = generate_planted(r2, 600, motif, 0.0, 4);
    WorkCounters wc;
    Rng run = sub_rng(seed, 24);
    auto pb = initial_boundaries(s1.seq, s2.seq, AlgorithmType::DeterministicSuperquadratic, p, run, wc);
    REQUIRE(pb.has_value());
    REQUIRE(pb->first.known());
    REQUIRE(*pb->first.left >= s1.lb - (p.v + p.u1));
    REQUIRE(*pb->first.left <= s1.lb);
    REQUIRE(*pb->first.right >= s1.rb);
    REQUIRE(*pb->first.right <= s1.rb + (p.v + p.u1));
    REQUIRE(*pb->second.left >= s2.lb - (p.v + p.u1));
    REQUIRE(*pb->second.left <= s2.lb);
  }
}

TEST_CASE("initial boundaries: a motif spanning half the sequence still anchors", "[pipeline]") {
  DerivedParams p = desk_params(600, 0.0);
  Rng motif_rng(31);
  SymbolString motif = random_string(motif_rng, 300);
  Rng r1(32), r2(33);
  PlantedSequence s1 = generate_planted(r1, 600, motif, 0.0, 4);
  PlantedSequence s2 = generate_planted(r2, 600, motif, 0.0, 4);
  WorkCounters wc;
  Rng run(34);
  auto pb = initial_boundaries(s1.seq, s2.seq, AlgorithmType::RandomizedSublinear, p, run, wc);
  REQUIRE(pb.has_value());
  REQUIRE(*pb->first.left <= s1.lb);
}

TEST_CASE("initial boundaries fail on pure background", "[pipeline]") {
  ParamOverrides ov;
  ov.window_override = 12;
  ov.epsilon = 0.03;  // beta = 0.06: windows must be identical at w = 12
  DerivedParams p = desk_params(600, 0.0, ov);
  int failures = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = sub_rng(seed, 41);
    SymbolString s1 = random_string(rng, 600);
    SymbolString s2 = random_string(rng, 600);
    WorkCounters wc;
    Rng run = sub_rng(seed, 42);
    auto pb = initial_boundaries(s1, s2, AlgorithmType::DeterministicSuperquadratic, p, run, wc);
    failures += !pb.has_value();
  }
  REQUIRE(failures >= 95);
}

TEST_CASE("motif length median", "[pipeline]") {
  auto rb = [](int l, int r) { return RoughBoundaries{l, r}; };
  REQUIRE(motif_length_median({rb(0, 16), rb(0, 16), rb(0, 15), rb(0, 17), rb(0, 16)}) == 16);
  REQUIRE(motif_length_median({rb(0, 10), rb(0, 12), rb(0, 14), rb(0, 16)}) == 12);
  // unknown components are dropped first
  REQUIRE(motif_length_median({rb(0, 10), RoughBoundaries{}, rb(0, 14)}) == 10);
  REQUIRE_THROWS_AS(motif_length_median({RoughBoundaries{}}), std::runtime_error);

  for (int iter = 0; iter < 1000; ++iter) {
    Rng rng = sub_rng(616, 0, static_cast<uint64_t>(iter));
    int count = 1 + rng.below_int(15);
    std::vector<RoughBoundaries> list;
    std::vector<int> lengths;
    for (int i = 0; i < count; ++i) {
      int l = 1 + rng.below_int(50);
      int r = l + rng.below_int(100);
      list.push_back(rb(l, r));
      lengths.push_back(r - l);
    }
    std::sort(lengths.begin(), lengths.end());
    REQUIRE(motif_length_median(list) == lengths[(lengths.size() - 1) / 2]);
  }
}

TEST_CASE("median of planted pair boundaries approximates the motif length", "[pipeline]") {
  DerivedParams p = desk_params(600, 0.0);
  Rng motif_rng(51);
  SymbolString motif = random_string(motif_rng, 80);
  std::vector<RoughBoundaries> firsts;
  for (uint64_t i = 0; i < 10; ++i) {
    Rng r1 = sub_rng(i, 52);
    Rng r2 = sub_rng(i, 53);
    PlantedSequence s1 = generate_planted(r1, 600, motif, 0.0, 4);
    PlantedSequence s2 = generate_planted(r2, 600, motif, 0.0, 4);
    WorkCounters wc;
    Rng run = sub_rng(i, 54);
    auto pb = initial_boundaries(s1.seq, s2.seq, AlgorithmType::DeterministicSuperquadratic, p, run, wc);
    REQUIRE(pb.has_value());
    firsts.push_back(pb->first);
  }
  int l1 = motif_length_median(firsts);
  REQUIRE(l1 >= 80 - 2 * (p.v + p.u1));
  REQUIRE(l1 <= 80 + 2 * (p.v + p.u1));
}

TEST_CASE("match region recovers exact boundaries from clean edges", "[pipeline]") {
  ParamOverrides ov;
  ov.window_override = 10;
  ov.v = 5;
  DerivedParams p = desk_params(200, 0.0, ov);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Rng motif_rng = sub_rng(seed, 61);
    SymbolString motif = random_string(motif_rng, 40);
    Rng r = sub_rng(seed, 62);
    PlantedSequence s = generate_planted(r, 200, motif, 0.0, 4);
    SymbolString g_l(motif.begin(), motif.begin() + 10);
    SymbolString g_r(motif.end() - 10, motif.end());
    WorkCounters wc;
    auto region = match_region(g_l, g_r, s.seq, {s.lb, s.rb}, p, wc);
    REQUIRE(region.has_value());
    REQUIRE(region->lo == s.lb);
    REQUIRE(region->hi == s.rb);

    // displaced boundaries beyond v+u2 miss the motif entirely
    int shift = p.v + p.u2 + 1;
    if (s.lb - shift >= 1 && s.rb - shift >= 10) {
      WorkCounters wc2;
      auto miss = match_region(g_l, g_r, s.seq, {s.lb - (p.v + p.u2 + 10), s.rb - shift - 10}, p, wc2);
      if (miss) {
        REQUIRE((miss->lo != s.lb || miss->hi != s.rb));
      }
    }
  }
}

TEST_CASE("match region on the worked-example members", "[pipeline][fixture]") {
  WorkedExample ex;
  ParamOverrides ov;
  ov.epsilon = 0.1125;
  ov.alpha = 0.0625;
  ov.v = 3;
  ov.window_override = 8;
  DerivedParams p = derive_and_validate_params(5, 10, ov, 49);
  // motif edges taken from the first anchor sequence at its true boundaries
  SymbolString g_l(ex.z1[0].begin() + 10, ex.z1[0].begin() + 18);  // TTATTAAC
  SymbolString g_r(ex.z1[0].begin() + 18, ex.z1[0].begin() + 26);  // GATTAGCS

  // Boundary guesses one position outside the true motif, as in the worked
  // illustration.
  std::vector<std::optional<Interval>> got;
  for (size_t j = 0; j < ex.z2.size(); ++j) {
    WorkCounters wc;
    RoughBoundaries rb{ex.z2_truth[j].lo - 1, ex.z2_truth[j].hi + 1};
    got.push_back(match_region(g_l, g_r, ex.z2[j], rb, p, wc));
  }
  REQUIRE(got[0] == Interval{12, 27});
  REQUIRE(got[1] == Interval{10, 25});
  REQUIRE(got[2] == Interval{16, 31});
  // The fourth member mutates the final motif character; no suffix-anchored
  // predicate can admit a trailing mismatch, so extraction abstains.
  REQUIRE_FALSE(got[3].has_value());
  REQUIRE(got[4] == Interval{12, 27});
}

TEST_CASE("extract phase accepts the first candidate when everything matches", "[pipeline]") {
  ParamOverrides ov;
  ov.window_override = 10;
  ov.v = 5;
  DerivedParams p = desk_params(200, 0.0, ov);
  Rng motif_rng(71);
  SymbolString motif = random_string(motif_rng, 40);
  Rng anchor_rng(72);
  PlantedSequence anchor = generate_planted(anchor_rng, 200, motif, 0.0, 4);
  std::vector<SymbolString> z2;
  std::vector<RoughBoundaries> rb2;
  std::vector<PlantedSequence> truth;
  for (uint64_t j = 0; j < 10; ++j) {
    Rng r = sub_rng(j, 73);
    PlantedSequence s = generate_planted(r, 200, motif, 0.0, 4);
    rb2.push_back({s.lb, s.rb});
    truth.push_back(s);
    z2.push_back(truth.back().seq);
  }
  WorkCounters wc;
  auto regions = extract_phase(anchor.seq, {anchor.lb, anchor.rb}, z2, rb2, p, wc);
  REQUIRE(regions.has_value());
  for (size_t j = 0; j < z2.size(); ++j) {
    REQUIRE((*regions)[j].has_value());
    REQUIRE((*regions)[j]->lo == truth[j].lb);
    REQUIRE((*regions)[j]->hi == truth[j].rb);
  }
}

TEST_CASE("extract phase returns NO_CANDIDATE when boundaries point nowhere", "[pipeline]") {
  ParamOverrides ov;
  ov.window_override = 10;
  ov.v = 5;
  DerivedParams p = desk_params(200, 0.0, ov);
  Rng rng(81);
  SymbolString anchor = random_string(rng, 200);
  std::vector<SymbolString> z2;
  std::vector<RoughBoundaries> rb2;
  for (int j = 0; j < 6; ++j) {
    z2.push_back(random_string(rng, 200));
    rb2.push_back({20, 80});
  }
  WorkCounters wc;
  auto regions = extract_phase(anchor, {20, 80}, z2, rb2, p, wc);
  REQUIRE_FALSE(regions.has_value());
}

TEST_CASE("voting phase", "[pipeline]") {
  Alphabet ab("ACGST");
  auto enc = [&](const std::string& s) { return ab.encode(s); };
  // last column of the worked example: S, S, S, A, S -> S
  SymbolString c = voting_phase({enc("S"), enc("S"), enc("S"), enc("A"), enc("S")}, 5);
  REQUIRE(ab.decode(c) == "S");

  REQUIRE(ab.decode(voting_phase({enc("ACG"), enc("ACG")}, 5)) == "ACG");
  // ties break to the smallest alphabet index
  REQUIRE(ab.decode(voting_phase({enc("A"), enc("A"), enc("C"), enc("C")}, 5)) == "A");
  REQUIRE_THROWS_AS(voting_phase({enc("AC"), enc("ACG")}, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(voting_phase({}, 5), std::invalid_argument);

  for (int iter = 0; iter < 1000; ++iter) {
    Rng rng = sub_rng(717, 0, static_cast<uint64_t>(iter));
    int m = 1 + rng.below_int(12);
    int k = 1 + rng.below_int(9);
    std::vector<SymbolString> regions;
    for (int i = 0; i < k; ++i) {
      SymbolString s(static_cast<size_t>(m));
      for (auto& x : s) x = static_cast<uint8_t>(rng.below_int(4));
      regions.push_back(s);
    }
    SymbolString got = voting_phase(regions, 4);
    for (int j = 0; j < m; ++j) {
      int counts[4] = {0, 0, 0, 0};
      for (const auto& r : regions) ++counts[r[static_cast<size_t>(j)]];
      // no symbol may strictly beat the winner; ties favour the smaller index
      REQUIRE(counts[got[static_cast<size_t>(j)]] ==
              *std::max_element(std::begin(counts), std::end(counts)));
      for (int sym = 0; sym < got[static_cast<size_t>(j)]; ++sym)
        REQUIRE(counts[sym] < counts[got[static_cast<size_t>(j)]]);
    }
  }
}

TEST_CASE("recover motif solves the worked example", "[pipeline][fixture]") {
  WorkedExample ex;
  auto res = recover_motif(ex.z1, ex.z2, AlgorithmType::DeterministicSuperquadratic, ex.params, 1);
  REQUIRE(res.has_value());
  REQUIRE(ex.alphabet.decode(res->consensus) == ex.motif_text);
  REQUIRE_FALSE(res->guarantee_regime);
  // output length agreement across the voted regions
  for (const auto& region : res->regions)
    if (region) REQUIRE(region->hi - region->lo + 1 == static_cast<int>(res->consensus.size()));
}

TEST_CASE("recover motif is deterministic for a fixed seed", "[pipeline]") {
  WorkedExample ex;
  auto a = recover_motif(ex.z1, ex.z2, AlgorithmType::DeterministicSuperquadratic, ex.params, 99);
  auto b = recover_motif(ex.z1, ex.z2, AlgorithmType::DeterministicSuperquadratic, ex.params, 99);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  REQUIRE(a->consensus == b->consensus);
  REQUIRE(a->counters == b->counters);
  REQUIRE(a->regions == b->regions);
  REQUIRE(a->boundaries == b->boundaries);
}

TEST_CASE("recover motif: zero-mutation desk instances recover exactly", "[pipeline]") {
  int exact = 0;
  const int trials = 20;
  for (uint64_t seed = 0; seed < trials; ++seed) {
    DerivedParams p = desk_params(600, 0.0);
    Rng motif_rng = sub_rng(seed, 91);
    SymbolString motif = random_string(motif_rng, 20);
    std::vector<SymbolString> z1, z2;
    for (uint64_t i = 0; i < 20; ++i) {
      Rng r = sub_rng(seed, 92, i);
      PlantedSequence s = generate_planted(r, 600, motif, 0.0, 4);
      if (i < 10)
        z1.push_back(std::move(s.seq));
      else
        z2.push_back(std::move(s.seq));
    }
    auto res = recover_motif(z1, z2, AlgorithmType::DeterministicSuperquadratic, p, seed);
    if (res && res->consensus == motif) ++exact;
  }
  REQUIRE(exact >= 19);
}

TEST_CASE("recover motif: degenerate inputs are rejected", "[pipeline]") {
  WorkedExample ex;
  REQUIRE_THROWS_AS(recover_motif(ex.z1, {}, AlgorithmType::DeterministicSuperquadratic, ex.params, 1),
                    std::invalid_argument);
  std::vector<SymbolString> odd(ex.z1.begin(), ex.z1.begin() + 1);
  REQUIRE_THROWS_AS(recover_motif(odd, ex.z2, AlgorithmType::DeterministicSuperquadratic, ex.params, 1),
                    std::invalid_argument);
}

TEST_CASE("full selection dominates sampling in every counter", "[pipeline]") {
  DerivedParams p = desk_params(600, 0.0);
  Rng motif_rng(101);
  SymbolString motif = random_string(motif_rng, 20);
  std::vector<SymbolString> z1, z2;
  for (uint64_t i = 0; i < 12; ++i) {
    Rng r = sub_rng(4242, 102, i);
    PlantedSequence s = generate_planted(r, 600, motif, 0.0, 4);
    if (i < 6)
      z1.push_back(std::move(s.seq));
    else
      z2.push_back(std::move(s.seq));
  }
  auto det = recover_motif(z1, z2, AlgorithmType::DeterministicSuperquadratic, p, 7);
  auto sub = recover_motif(z1, z2, AlgorithmType::RandomizedSublinear, p, 7);
  REQUIRE(det.has_value());
  REQUIRE(sub.has_value());
  REQUIRE(det->counters.positions_sampled >= sub->counters.positions_sampled);
  REQUIRE(det->counters.window_comparisons >= sub->counters.window_comparisons);
  REQUIRE(det->counters.character_comparisons >= sub->counters.character_comparisons);
}

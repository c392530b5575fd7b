#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skewopt/census.hpp"
#include "skewopt/classify.hpp"
#include "skewopt/families.hpp"
#include "skewopt/formats.hpp"
#include "skewopt/search.hpp"
#include "skewopt/spectra.hpp"
#include "skewopt/verify.hpp"
#include "support.hpp"

using namespace skewopt;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Graph> enumerate_upto(int max_n, int k) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto batch = enumerate_connected_k_regular(n, k);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::multiset<std::string> optimum_labels(const CensusReport& report) {
  std::multiset<std::string> out;
  for (const auto& r : report.records)
    if (r.has_optimum) out.insert(r.classification ? r.classification->name() : "?");
  return out;
}

Outcome gram_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  const bool g1 = gram(reference_skew_matrix(FamilyLabel::g1())) == IntMatrix::identity(8, 4);
  const bool g2 = gram(reference_skew_matrix(FamilyLabel::g2())) == IntMatrix::identity(6, 4);
  const bool g3 = gram(reference_skew_matrix(FamilyLabel::g3())) == IntMatrix::identity(14, 4);
  const double elapsed = seconds_since(t0);
  o.require(g1 && g2 && g3, "a Gram matrix differs from 4I");
  o.require(reference_skew_matrix(FamilyLabel::g1()) == printed_g1() &&
                reference_skew_matrix(FamilyLabel::g2()) == printed_g2() &&
                reference_skew_matrix(FamilyLabel::g3()) == printed_g3(),
            "stored matrices differ from the printed ones");
  o.require(elapsed < 1e-3, "took " + std::to_string(elapsed * 1e3) + " ms");
  if (o.pass) o.detail = std::to_string(elapsed * 1e6) + " us";
  return o;
}

Outcome block_identities() {
  Outcome o;
  const BlockSet b = canonical_blocks();
  o.require(b.a == printed_a() && b.b == printed_b() && b.c == printed_c() && b.d == printed_d(),
            "canonical blocks differ from the printed ones");
  int count = 0;
  for (int set = 1; set <= 3; ++set)
    for (const auto& r : check_block_identities(b, set)) {
      ++count;
      o.require(r.holds, "set " + std::to_string(set) + ": " + r.name);
    }
  if (o.pass) o.detail = std::to_string(count) + " identities";
  return o;
}

Outcome family_optimality() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0;
  for (int p = 1; p <= 10; ++p)
    for (const auto& l : {FamilyLabel::gi(p), FamilyLabel::hj(p)}) {
      const OrientedGraph g = orient_family(l);
      o.require(is_optimum(g, 4), l.name() + " is not optimum");
      const double want = 2.0 * family_order(l);
      const double err = std::abs(skew_energy(g).skew_energy - want);
      worst = std::max(worst, err);
      o.require(err <= 1e-8, l.name() + " energy off by " + std::to_string(err));
    }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max energy error %.2e, %.3f s", worst, elapsed);
    o.detail = buf;
  }
  return o;
}

Outcome structural_agreement() {
  Outcome o;
  const BlockSet b = canonical_blocks();
  for (int p = 1; p <= 6; ++p)
    for (const auto& l : {FamilyLabel::gi(p), FamilyLabel::hj(p)})
      o.require(skew_adjacency(orient_family(l)) == block_skew_matrix(l, b), l.name() + " differs");
  if (o.pass) o.detail = "GI(1..6), HJ(1..6)";
  return o;
}

Outcome small_k_census() {
  Outcome o;
  const auto t0 = Clock::now();
  const CensusReport k2 = census(enumerate_upto(8, 2), 2);
  const CensusReport k3 = census(enumerate_upto(8, 3), 3);
  const double elapsed = seconds_since(t0);
  o.require(optimum_labels(k2) == std::multiset<std::string>{"C4"}, "k=2 optimum set is not {C4}");
  o.require(optimum_labels(k3) == std::multiset<std::string>{"K4", "Q3"}, "k=3 optimum set is not {K4, Q3}");
  o.require(k2.violations == 0 && k3.violations == 0, "classification disagrees with search");
  o.require(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(elapsed) + " s";
  return o;
}

Outcome main_census(std::vector<Graph>& corpus) {
  Outcome o;
  const auto t0 = Clock::now();
  corpus = enumerate_upto(10, 4);
  const CensusReport report = census(corpus, 4, 1);
  const double elapsed = seconds_since(t0);

  const std::vector<int> published{1, 1, 2, 6, 16, 59};
  for (int n = 5; n <= 10; ++n) {
    const int got = report.totals.count(n) ? report.totals.at(n).graphs : 0;
    o.require(got == published[n - 5], "n=" + std::to_string(n) + " count " + std::to_string(got));
    o.require(got == SwapCensus(n, 4).connected_classes(), "n=" + std::to_string(n) + " disagrees with oracle");
  }
  o.require(optimum_labels(report) == std::multiset<std::string>{"G2", "G1", "HJ(1)", "GI(1)"},
            "optimum set is not {G2, G1, K4,4, GI(1)}");
  o.require(report.violations == 0, std::to_string(report.violations) + " violations");
  for (const Graph& g : corpus)
    if (!theorem_crosscheck(g).consistent) o.require(false, "crosscheck failed on " + emit_graph6(g));
  o.require(elapsed < 300.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  std::vector<OrientedGraph> cases;
  for (const auto& l : {FamilyLabel::g1(), FamilyLabel::g2(), FamilyLabel::g3(), FamilyLabel::q4(), FamilyLabel::k2(),
                        FamilyLabel::c4(), FamilyLabel::k4(), FamilyLabel::q3()})
    cases.push_back(orient_family(l));
  for (int i = 1; 4 * i + 6 <= 22; ++i) cases.push_back(orient_family(FamilyLabel::gi(i)));
  for (int j = 1; 4 * j + 4 <= 22; ++j) cases.push_back(orient_family(FamilyLabel::hj(j)));

  std::mt19937_64 rng(101);
  for (int t = 0; t < 50; ++t) {
    const int k = 2 + t % 3;
    const int n = k == 3 ? 4 + 2 * (t % 3) : k + 1 + t % (9 - k - 1);
    const Graph g = random_regular_graph(n, k, rng);
    OrientedGraph sigma = random_orientation(g, rng);
    if (t % 5 == 0)
      if (auto w = find_optimum_orientation(g, k)) sigma = switch_at(*w, random_subset(n, rng));
    cases.push_back(sigma);
  }

  int optimum = 0;
  for (const auto& g : cases) {
    const int k = g.base().max_degree();
    const bool opt = is_optimum(g, k);
    optimum += opt;
    o.require(two_walk_balanced(g) == opt, "two-walk balance disagrees on n=" + std::to_string(g.order()));
    o.require(walk_identity_holds(g, 4), "walk identity fails on n=" + std::to_string(g.order()));
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " graphs, " + std::to_string(optimum) + " optimum";
  return o;
}

Outcome invariance_suite() {
  Outcome o;
  std::mt19937_64 rng(103);
  std::vector<FamilyLabel> members{FamilyLabel::g1(), FamilyLabel::g2(), FamilyLabel::g3(), FamilyLabel::q4()};
  for (int p = 1; p <= 4; ++p) {
    members.push_back(FamilyLabel::gi(p));
    members.push_back(FamilyLabel::hj(p));
  }

  for (int t = 0; t < 500; ++t) {
    const FamilyLabel& l = members[t % members.size()];
    OrientedGraph g = orient_family(l);
    if (t % 2 == 1) g = random_orientation(g.base(), rng);
    const OrientedGraph s = switch_at(g, random_subset(g.order(), rng));
    o.require(is_optimum(s, 4) == is_optimum(g, 4), "switching changed optimality of " + l.name());
  }

  for (int t = 0; t < 20; ++t) {
    const FamilyLabel& a = members[rng() % members.size()];
    const FamilyLabel& b = members[rng() % members.size()];
    OrientedGraph ga = orient_family(a);
    OrientedGraph gb = orient_family(b);
    if (t % 3 == 1) ga = random_orientation(ga.base(), rng);
    if (t % 4 == 2) gb = random_orientation(gb.base(), rng);
    const bool both = is_optimum(ga, 4) && is_optimum(gb, 4);
    o.require(is_optimum(disjoint_union(ga, gb), 4) == both, "union rule fails on " + a.name() + "+" + b.name());
  }

  for (int t = 0; t < 50; ++t) {
    const FamilyLabel& l = members[t % members.size()];
    const Graph g = build_family(l);
    const Classification c = classify(relabel(g, random_permutation(g.order(), rng)));
    o.require(c.label == l, "relabeled " + l.name() + " classified as " + c.name());
  }
  if (o.pass) o.detail = "500 switches, 20 unions, 50 relabelings";
  return o;
}

Outcome numerics() {
  Outcome o;
  std::mt19937_64 rng(107);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = static_cast<std::int64_t>(rng() % 5) - 2;
    const auto got = symmetric_eigenvalues(m);
    const auto want = bisection_eigenvalues(m);
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
  }
  o.require(worst <= 1e-8, "eigenvalue error " + std::to_string(worst));

  for (int t = 0; t < 200; ++t) {
    const int k = 1 + t % 5;
    const int n = 2 * ((k + 2) / 2 + static_cast<int>(rng() % 4));
    const OrientedGraph g = random_orientation(random_regular_graph(n, k, rng, false), rng);
    const SpectralSummary s = skew_energy(g);
    o.require(s.skew_energy <= s.upper_bound + 1e-8, "energy above n sqrt(max degree)");
  }
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max eigenvalue error %.2e", worst);
    o.detail = buf;
  }
  return o;
}

Outcome format_round_trips(const std::vector<Graph>& census_corpus) {
  Outcome o;
  std::vector<Graph> corpus = census_corpus;
  for (int k = 2; k <= 3; ++k) {
    auto more = enumerate_upto(8, k);
    corpus.insert(corpus.end(), more.begin(), more.end());
  }
  std::mt19937_64 rng(109);
  std::string text;
  for (const Graph& g : corpus) {
    const std::string code = emit_graph6(g);
    text += code + "\n";
    o.require(emit_graph6(parse_graph6(code)) == code, "graph6 round trip fails on " + code);
    o.require(parse_graph6(code) == g, "graph6 decode differs on " + code);
    const OrientedGraph sigma = random_orientation(g, rng);
    const std::string arcs = emit_arclist(sigma);
    o.require(emit_arclist(parse_arclist(arcs)) == arcs, "arc list round trip fails on " + code);
    o.require(parse_arclist(arcs) == sigma, "arc list decode differs on " + code);
  }
  std::string again;
  for (const Graph& g : parse_graph6_corpus(text)) again += emit_graph6(g) + "\n";
  o.require(again == text, "corpus round trip differs");
  if (o.pass) o.detail = std::to_string(corpus.size()) + " graphs";
  return o;
}

}  // namespace

int main() {
  std::vector<Graph> census_corpus;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact Gram reproduction", gram_reproduction},
      {"block identities", block_identities},
      {"family optimality", family_optimality},
      {"structural agreement", structural_agreement},
      {"small-k census", small_k_census},
      {"4-regular census n<=10", [&] { return main_census(census_corpus); }},
      {"oracle equivalences", oracle_equivalences},
      {"invariance suite", invariance_suite},
      {"numerics", numerics},
      {"format round trips", [&] { return format_round_trips(census_corpus); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

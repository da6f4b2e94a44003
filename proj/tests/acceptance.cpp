// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "ttone/bounds.hpp"
#include "ttone/classify.hpp"
#include "ttone/enumerate.hpp"
#include "ttone/errors.hpp"
#include "ttone/exact.hpp"
#include "ttone/generators.hpp"
#include "ttone/halin.hpp"
#include "ttone/halin_colorer.hpp"
#include "ttone/outerplanar_colorer.hpp"
#include "ttone/scan.hpp"
#include "ttone/tree_colorer.hpp"
#include "ttone/verify.hpp"

using namespace ttone;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Fails the criterion with a note; keeps the first few notes.
struct Recorder {
  Outcome out;
  int notes = 0;
  void fail(const std::string& why) {
    out.pass = false;
    if (notes++ < 5) out.detail += (out.detail.empty() ? "" : "; ") + why;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

bool oracle_valid(const Graph& g, const Labeling& f, int mode) {
  if (!f.total()) return false;
  for (Label l : f.labels())
    if (l.size() != f.t() || l.max_color() > f.k()) return false;
  return oracle::violations(g, oracle::lists(f), mode).empty();
}

// Every solver return in this run goes through here.
int sat_checks = 0;
int sat_failures = 0;

TauResult checked_tau(const Graph& g, int t, SearchBudget budget = {}) {
  TauResult r = exact_tau(g, t, budget);
  ++sat_checks;
  if (r.witness.k() != r.k || r.witness.t() != t || !oracle_valid(g, r.witness, 0)) ++sat_failures;
  return r;
}

SolveOutcome checked_decide(const Graph& g, int t, int k, SearchBudget budget = {}) {
  SolveOutcome r = decide_colorable(g, t, k, budget);
  ++sat_checks;
  if (r.status == SolveStatus::sat && (!r.witness || r.witness->k() != k || !oracle_valid(g, *r.witness, 0)))
    ++sat_failures;
  if (r.status != SolveStatus::sat && r.witness) ++sat_failures;
  return r;
}

std::string seq(const std::vector<int>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

// ceil((a + sqrt(b)) / 2) by integer search.
int ceil_half_sum_sqrt(int a, int b) {
  int k = 0;
  // smallest k with 2k - a >= sqrt(b), i.e. 2k - a >= 0 and (2k - a)^2 >= b
  while (2 * k - a < 0 || (2 * k - a) * (2 * k - a) < b) ++k;
  return k;
}

HalinStructure halin_of(const GraphBundle& b) { return validate_halin(b.graph, *b.tree_edges, *b.leaf_order); }

Outcome cycles() {
  Recorder r;
  const std::vector<int> want{6, 6, 5, 5, 6, 5, 5, 5, 5, 5};
  std::vector<int> got;
  for (int n = 3; n <= 12; ++n) got.push_back(checked_tau(generate("cycle", {n}).graph, 2).k);
  r.expect(got == want, "got " + seq(got));
  r.out.detail = "tau2(C3..C12) = " + seq(got) + (r.out.detail.empty() ? "" : " " + r.out.detail);
  return r.out;
}

Outcome wheels() {
  Recorder r;
  const std::vector<int> want{8, 8, 7, 7, 8, 7, 7, 8};
  std::vector<int> got;
  for (int d = 3; d <= 10; ++d) got.push_back(checked_tau(generate("wheel", {0, d}).graph, 2).k);
  r.expect(got == want, "got " + seq(got));
  r.out.detail = "tau2(W3..W10) = " + seq(got) + (r.out.detail.empty() ? "" : " " + r.out.detail);
  return r.out;
}

Outcome point_values() {
  Recorder r;
  struct Case {
    const char* name;
    Graph g;
    int t;
    int want;
  };
  std::vector<Case> cases{{"K4", generate("complete", {4}).graph, 2, 8},
                          {"K4-e", generate("k4e", {}).graph, 2, 7},
                          {"P3", generate("path", {3}).graph, 2, 5},
                          {"K4-e", generate("k4e", {}).graph, 3, 11},
                          {"fig1", generate("fig1", {}).graph, 3, 11}};
  for (const auto& c : cases) {
    int k = checked_tau(c.g, c.t).k;
    r.out.detail += std::string(r.out.detail.empty() ? "" : " ") + "tau" + std::to_string(c.t) + "(" + c.name +
                    ")=" + std::to_string(k);
    if (k != c.want) r.out.pass = false;
  }
  return r.out;
}

Outcome characterization() {
  Recorder r;
  int enumerated = 0, random = 0;
  std::vector<int> per_class(8, 0);
  auto check = [&](const Graph& g, const std::vector<Vertex>& order, const std::string& tag) {
    int tau = checked_tau(g, 2).k;
    int cls = classify_subcubic_outerplanar(g, order).tau_class;
    ++per_class[std::clamp(cls, 0, 7)];
    r.expect(tau == cls, tag + ": exact " + std::to_string(tau) + " vs class " + std::to_string(cls));
  };
  for (int n = 3; n <= 8; ++n)
    for (const auto& e : enumerate_subcubic_outerplanar(n)) {
      check(e.graph, e.outer_order, "enumerated n=" + std::to_string(n));
      ++enumerated;
    }
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 3 + static_cast<int>(seed % 7);
    auto b = generate("outerplanar", {n, 0, seed % 4 == 3 && n >= 5 ? "long" : "any"}, 1000 + seed);
    check(b.graph, *b.outer_order, "random seed=" + std::to_string(1000 + seed));
    ++random;
  }
  r.expect(random >= 100, "too few random instances");
  std::string note = std::to_string(enumerated) + " enumerated + " + std::to_string(random) +
                     " random; classes 5/6/7 = " + std::to_string(per_class[5]) + "/" + std::to_string(per_class[6]) +
                     "/" + std::to_string(per_class[7]);
  r.out.detail = note + (r.out.detail.empty() ? "" : "; " + r.out.detail);
  return r.out;
}

Outcome constructive_outerplanar() {
  Recorder r;
  int count = 0, max_n = 0;
  for (std::uint64_t seed = 0; seed < 220; ++seed) {
    int n = 3 + static_cast<int>(seed * 7919 % 58);
    auto b = generate("outerplanar", {n, 0, seed % 3 == 2 && n >= 5 ? "long" : "any"}, 5000 + seed);
    OuterplaneEmbedding emb{b.graph, *b.outer_order};
    std::string tag = "seed=" + std::to_string(5000 + seed);
    try {
      int cls = classify_subcubic_outerplanar(b.graph, b.outer_order).tau_class;
      auto a = color_subcubic_outerplanar(emb, OuterplanarTarget::automatic);
      r.expect(a.k == cls, tag + ": auto k " + std::to_string(a.k) + " vs class " + std::to_string(cls));
      r.expect(a.labeling.k() == cls && verify(b.graph, a.labeling, Mode::tone).valid, tag + ": auto invalid");
      r.expect(oracle_valid(b.graph, a.labeling, 0), tag + ": auto rejected by reference check");

      auto three = color_subcubic_outerplanar(emb, OuterplanarTarget::threegood11);
      r.expect(three.labeling.k() <= 11 && three.labeling.t() == 3, tag + ": 3-good palette");
      r.expect(verify(b.graph, three.labeling, Mode::three_good).valid, tag + ": 3-good invalid");
      r.expect(verify(b.graph, three.labeling, Mode::tone).valid, tag + ": 3-good not 3-tone");
      r.expect(oracle_valid(b.graph, three.labeling, 2) && oracle_valid(b.graph, three.labeling, 0),
               tag + ": 3-good rejected by reference check");
    } catch (const Error& e) {
      r.fail(tag + ": " + e.code());
    }
    ++count;
    max_n = std::max(max_n, b.graph.order());
  }
  r.expect(count >= 200, "too few instances");
  r.out.detail = std::to_string(count) + " instances, n <= " + std::to_string(max_n) +
                 (r.out.detail.empty() ? "" : "; " + r.out.detail);
  return r.out;
}

Outcome cubic_halin() {
  Recorder r;
  int count = 0, fallbacks = 0, case2 = 0, most = 0;
  for (std::uint64_t seed = 0; seed < 110; ++seed) {
    int n = 6 + 2 * static_cast<int>(seed * 37 % 58);
    auto b = generate("cubicHalin", {n}, 9000 + seed);
    std::string tag = "seed=" + std::to_string(9000 + seed);
    try {
      auto c = color_cubic_halin7(halin_of(b));
      r.expect(c.labeling.colors_used() <= 7 && c.labeling.k() <= 7, tag + ": more than 7 colors");
      r.expect(verify(b.graph, c.labeling, Mode::tone).valid && oracle_valid(b.graph, c.labeling, 0),
               tag + ": invalid");
      fallbacks += c.search_fallback;
      case2 += c.final_case == 2;
      most = std::max(most, c.labeling.colors_used());
    } catch (const Error& e) {
      r.fail(tag + ": " + e.code());
    }
    ++count;
  }
  r.expect(count >= 100, "too few instances");

  // Exhaustive small range through the scanner.
  ScanParams p;
  p.max_n = 12;
  p.jobs = 4;
  ScanReport rep = scan_conjecture(Conjecture::halin6, p);
  int worst = 0;
  for (const auto& row : rep.rows) {
    r.expect(!row.exhausted, "scan budget exhausted on row " + std::to_string(row.id));
    r.expect(row.tau.front() <= 7, "tau2 > 7 on row " + std::to_string(row.id));
    worst = std::max(worst, row.tau.front());
  }
  std::string note = std::to_string(count) + " random, max colors " + std::to_string(most) + ", final case 2 in " +
                     std::to_string(case2) + ", search fallback " + std::to_string(fallbacks) + "; n <= 12: " +
                     std::to_string(rep.rows.size()) + " graphs, max tau2 " + std::to_string(worst) +
                     ", needing 7: " + std::to_string(rep.flagged);
  r.out.detail = note + (r.out.detail.empty() ? "" : "; " + r.out.detail);
  return r.out;
}

Outcome general_halin() {
  Recorder r;
  for (int d : {3, 8, 17}) {
    int by_hand = std::max(10, ceil_half_sum_sqrt(13, 8 * d - 15));
    r.expect(halin_bound(d) == by_hand, "halin_bound(" + std::to_string(d) + ")");
  }
  r.expect(halin_bound(3) == 10 && halin_bound(8) == 10 && halin_bound(17) == 12, "spot values");
  int count = 0, reductions = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int d = 3 + static_cast<int>(seed % 18);
    int n = d + 1 + static_cast<int>(seed * 13 % 60);
    if (n == d + 2) ++n;
    if (d == 3 && n % 2) ++n;
    auto b = generate("halin", {n, d}, 7000 + seed);
    std::string tag = "seed=" + std::to_string(7000 + seed);
    try {
      int delta = b.graph.max_degree();
      auto c = color_halin(halin_of(b));
      r.expect(c.labeling.colors_used() <= halin_bound(delta), tag + ": above the bound");
      r.expect(verify(b.graph, c.labeling, Mode::tone).valid && oracle_valid(b.graph, c.labeling, 0),
               tag + ": invalid");
      reductions += c.reductions;
    } catch (const Error& e) {
      r.fail(tag + ": " + e.code());
    }
    ++count;
  }
  r.expect(count >= 50, "too few instances");
  r.out.detail = std::to_string(count) + " instances, " + std::to_string(reductions) + " fan reductions" +
                 (r.out.detail.empty() ? "" : "; " + r.out.detail);
  return r.out;
}

Graph tree_from_prufer(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back(make_edge(leaf, c));
    --degree[leaf];
    --degree[c];
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) rest.push_back(v);
  edges.push_back(make_edge(rest[0], rest[1]));
  return Graph(n, edges);
}

Outcome trees() {
  Recorder r;
  std::vector<std::pair<std::string, Graph>> family;
  for (int n = 2; n <= 10; ++n) family.push_back({"P" + std::to_string(n), generate("path", {n}).graph});
  for (int d = 1; d <= 6; ++d) {
    std::vector<Edge> e;
    for (int i = 1; i <= d; ++i) e.push_back({0, i});
    family.push_back({"K1," + std::to_string(d), Graph(d + 1, e)});
  }
  // Spiders: legs of the given lengths from a center.
  for (std::vector<int> legs : std::vector<std::vector<int>>{
           {2, 2, 2}, {1, 2, 3}, {3, 3, 2}, {2, 2, 1, 1}, {2, 2, 2, 2}, {1, 1, 1, 2, 2}, {2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 2}}) {
    std::vector<Edge> e;
    int next = 1;
    for (int len : legs) {
      int prev = 0;
      for (int i = 0; i < len; ++i) {
        e.push_back({prev, next});
        prev = next++;
      }
    }
    if (next > 10) continue;
    family.push_back({"spider", Graph(next, e)});
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<int> code(n - 2);
    for (int& c : code) c = static_cast<int>(rng() % n);
    Graph t = tree_from_prufer(code);
    if (t.max_degree() > 6) continue;
    family.push_back({"prufer", t});
  }
  std::vector<int> seen_delta(7, 0);
  for (const auto& [name, t] : family) {
    int delta = t.max_degree();
    ++seen_delta[delta];
    int want = oracle::tree_formula_float(delta);
    int tau = checked_tau(t, 2).k;
    TreeColoring c = color_tree_2tone(t);
    std::string tag = name + " n=" + std::to_string(t.order());
    r.expect(tau == want, tag + ": exact " + std::to_string(tau) + " vs formula " + std::to_string(want));
    r.expect(c.k == want && c.labeling.k() == want && c.labeling.colors_used() == want,
             tag + ": greedy palette " + std::to_string(c.labeling.colors_used()));
    r.expect(oracle_valid(t, c.labeling, 0), tag + ": greedy invalid");
    r.expect(tree_tau_formula(delta) == want, tag + ": integer formula");
  }
  for (int d = 1; d <= 6; ++d) r.expect(seen_delta[d] > 0, "no tree with max degree " + std::to_string(d));
  r.out.detail = std::to_string(family.size()) + " trees" + (r.out.detail.empty() ? "" : "; " + r.out.detail);
  return r.out;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  int density = 2 + static_cast<int>(rng() % 6);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 10) < density) edges.push_back({u, v});
  return Graph(n, edges);
}

Outcome properties() {
  Recorder r;
  std::mt19937_64 rng(2024);

  // Verifier against the all-pairs reference.
  int pairs = 0;
  while (pairs < 1000) {
    int t = 2 + static_cast<int>(rng() % 2);
    int n = 2 + static_cast<int>(rng() % (t == 2 ? 8 : 5));
    Graph g = random_graph(rng, n);
    Labeling f;
    if (pairs % 2 == 0) {
      int k = t + static_cast<int>(rng() % 8);
      auto labels = all_labels(t, k);
      f = Labeling(n, t, k);
      for (int v = 0; v < n; ++v) f.set(v, labels[rng() % labels.size()]);
    } else {
      // One color of a valid coloring changed.
      f = t == 2 ? checked_tau(g, 2).witness : checked_tau(g, 3, SearchBudget{5'000'000}).witness;
      Vertex v = static_cast<Vertex>(rng() % n);
      auto colors = f[v].colors();
      Color drop = colors[rng() % colors.size()];
      Color add = 1 + static_cast<Color>(rng() % f.k());
      if (!f[v].contains(add)) f.set(v, (f[v] - Label{drop}) | Label{add});
    }
    for (int mode = 0; mode < 3; ++mode) {
      if (mode == 1 && t != 2) continue;
      if (mode == 2 && t != 3) continue;
      Mode m = mode == 0 ? Mode::tone : mode == 1 ? Mode::good : Mode::three_good;
      auto rep = verify(g, f, m);
      std::vector<std::pair<int, int>> got;
      for (const auto& x : rep.violations) got.push_back({x.u, x.v});
      r.expect(got == oracle::violations(g, oracle::lists(f), mode) && rep.valid == got.empty(),
               "verifier disagreement");
    }
    ++pairs;
  }

  // Decision calls on both sides of the optimum.
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
    int tau = checked_tau(g, 2).k;
    if (tau > 2) r.expect(checked_decide(g, 2, tau - 1).status == SolveStatus::unsat, "below optimum sat");
    r.expect(checked_decide(g, 2, tau + 1).status == SolveStatus::sat, "above optimum unsat");
  }

  // Color permutations preserve validity.
  int perms = 0;
  for (int i = 0; i < 100; ++i) {
    int t = 2 + i % 2;
    Graph g = random_graph(rng, 3 + static_cast<int>(rng() % (t == 2 ? 6 : 4)));
    Labeling w = checked_tau(g, t, SearchBudget{5'000'000}).witness;
    std::vector<Color> image(w.k() + 1);
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin() + 1, image.end(), rng);
    Labeling p = ColorPermutation::from_images(image).apply(w);
    r.expect(oracle_valid(g, p, 0) && verify(g, p, Mode::tone).valid, "permuted witness invalid");
    ++perms;
  }

  // Monotonicity under subgraphs.
  int mono = 0;
  for (int i = 0; i < 50; ++i) {
    int t = 2 + i % 2;
    int n = 3 + static_cast<int>(rng() % (t == 2 ? 6 : 4));
    Graph g = random_graph(rng, n);
    std::vector<Edge> kept;
    for (auto e : g.edges())
      if (rng() % 3) kept.push_back(e);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (v == 0 || rng() % 4) keep.push_back(v);
    Graph h = induced_subgraph(Graph(n, kept), keep);
    int tg = checked_tau(g, t, SearchBudget{20'000'000}).k;
    int th = checked_tau(h, t, SearchBudget{20'000'000}).k;
    r.expect(th <= tg, "monotonicity broken");
    ++mono;
  }

  r.expect(sat_failures == 0, std::to_string(sat_failures) + " solver returns failed their self-check");
  std::string note = std::to_string(pairs) + " verifier pairs, " + std::to_string(perms) + " permutations, " +
                     std::to_string(mono) + " subgraph pairs, " + std::to_string(sat_checks) +
                     " solver returns checked";
  r.out.detail = note + (r.out.detail.empty() ? "" : "; " + r.out.detail);
  return r.out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "cycle table", 10, cycles},
      {2, "wheel table", 300, wheels},
      {3, "point values", 120, point_values},
      {4, "characterization consistency", 1800, characterization},
      {5, "constructive outerplanar colorings", 600, constructive_outerplanar},
      {6, "cubic Halin 7-colorings", 300, cubic_halin},
      {7, "general Halin colorings", 600, general_halin},
      {8, "tree formula", 600, trees},
      {9, "property suite", 1800, properties},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_seconds;
    bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %d %s: %s (%.2f s, limit %.0f s%s) %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs,
                c.limit_seconds, in_time ? "" : ", over time", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

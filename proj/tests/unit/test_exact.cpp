#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "helpers.hpp"
#include "ttone/exact.hpp"
#include "ttone/generators.hpp"
#include "ttone/verify.hpp"

using namespace ttone;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int density) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 10) < density) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("point values") {
  CHECK(exact_tau(generate("complete", {4}).graph, 2).k == 8);
  CHECK(exact_tau(generate("k4e", {}).graph, 2).k == 7);
  CHECK(exact_tau(generate("path", {3}).graph, 2).k == 5);
  CHECK(exact_tau(generate("k4e", {}).graph, 3).k == 11);
  CHECK(exact_tau(generate("fig1", {}).graph, 3).k == 11);
}

TEST_CASE("complete graphs need 2n colors and one label per vertex is t colors") {
  for (int n = 1; n <= 5; ++n) CHECK(exact_tau(generate("complete", {n}).graph, 2).k == 2 * n);
  CHECK(exact_tau(Graph(1, {}), 3).k == 3);
  CHECK(exact_tau(Graph(3, {}), 2).k == 2);
}

TEST_CASE("decide_colorable reports sat and unsat around the optimum") {
  Graph k4e = generate("k4e", {}).graph;
  auto no = decide_colorable(k4e, 2, 6);
  CHECK(no.status == SolveStatus::unsat);
  CHECK(!no.witness);
  auto yes = decide_colorable(k4e, 2, 7);
  REQUIRE(yes.status == SolveStatus::sat);
  REQUIRE(yes.witness);
  CHECK(verify(k4e, *yes.witness, Mode::tone).valid);
  CHECK(yes.witness->k() == 7);
}

TEST_CASE("budget exhaustion is reported, never guessed") {
  Graph h = generate("cubicHalin", {14}, 1).graph;
  auto out = decide_colorable(h, 2, 6, SearchBudget{50});
  CHECK(out.status == SolveStatus::timeout);
  CHECK(!out.witness);
  CHECK(out.nodes <= 50);
  CHECK(kind_of([&] { exact_tau(h, 2, SearchBudget{50}); }) == ErrorKind::budget_exhausted);
  Graph fig1 = generate("fig1", {}).graph;
  CHECK(code_of([&] { decide_colorable(fig1, 3, 2); }) == "palette");
  CHECK(code_of([&] { decide_colorable(fig1, 0, 2); }) == "palette");
}

TEST_CASE("exact solver matches naive enumeration on tiny graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(rng, n, 2 + static_cast<int>(rng() % 5));
    int t = trial % 3 == 2 && n <= 4 ? 3 : 1 + static_cast<int>(rng() % 2);
    TauResult r = exact_tau(g, t);
    CHECK(r.k == oracle::brute_tau(g, t));
    CHECK(verify(g, r.witness, Mode::tone).valid);
    CHECK(r.witness.k() == r.k);
  }
}

TEST_CASE("tau_t is monotone under taking subgraphs") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n, 5);
    std::vector<Edge> kept;
    for (auto e : g.edges())
      if (rng() % 3 != 0) kept.push_back(e);
    Graph h(n, kept);
    CHECK(exact_tau(h, 2).k <= exact_tau(g, 2).k);
  }
}

TEST_CASE("C5 needs ten colors for 3-tone") {
  Graph c5 = generate("cycle", {5}).graph;
  CHECK(exact_tau(c5, 3).k == 10);
  CHECK(oracle::brute_tau(c5, 3) == 10);
  CHECK(exact_tau(c5, 2).k == 5);
}

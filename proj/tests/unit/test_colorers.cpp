#include <doctest.h>

#include "../oracle.hpp"
#include "helpers.hpp"
#include "ttone/bounds.hpp"
#include "ttone/classify.hpp"
#include "ttone/cycle_colorer.hpp"
#include "ttone/enumerate.hpp"
#include "ttone/exact.hpp"
#include "ttone/generators.hpp"
#include "ttone/halin_colorer.hpp"
#include "ttone/outerplanar_colorer.hpp"
#include "ttone/tree_colorer.hpp"
#include "ttone/verify.hpp"

using namespace ttone;

namespace {

OuterplaneEmbedding embed(const GraphBundle& b) { return {b.graph, *b.outer_order}; }

HalinStructure halin_from(const GraphBundle& b) { return validate_halin(b.graph, *b.tree_edges, *b.leaf_order); }

std::vector<Label> parse_labels(std::initializer_list<Label> l) { return l; }

}  // namespace

TEST_CASE("cycle colorings from the constructions") {
  CHECK(color_cycle(4, CycleScheme::good6).labels() == parse_labels({{1, 2}, {3, 4}, {1, 5}, {3, 6}}));
  CHECK(color_cycle(7, CycleScheme::good6).labels() ==
        parse_labels({{1, 2}, {3, 4}, {1, 5}, {2, 4}, {1, 3}, {2, 5}, {3, 6}}));
  CHECK(color_cycle(3, CycleScheme::threegood11).labels() == parse_labels({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  Graph c5 = generate("cycle", {5}).graph;
  Labeling f = color_cycle(5, CycleScheme::tone);
  CHECK(f.k() == 5);
  CHECK(verify(c5, f, Mode::tone).valid);
  CHECK(code_of([] { color_cycle(2, CycleScheme::tone); }) == "cycle-length");
}

TEST_CASE("every cycle scheme is valid for n up to 40") {
  for (int n = 3; n <= 40; ++n) {
    CAPTURE(n);
    Graph c = generate("cycle", {n}).graph;
    Labeling tone = color_cycle(n, CycleScheme::tone);
    CHECK(tone.colors_used() <= cycle_tau_formula(n));
    CHECK(verify(c, tone, Mode::tone).valid);
    Labeling good = color_cycle(n, CycleScheme::good6);
    CHECK(good.colors_used() <= 6);
    CHECK(verify(c, good, Mode::good).valid);
    Labeling three = color_cycle(n, CycleScheme::threegood11);
    CHECK(three.colors_used() <= 11);
    CHECK(verify(c, three, Mode::three_good).valid);
    CHECK(verify(c, three, Mode::tone).valid);
  }
}

TEST_CASE("transfer-matrix cycle coloring agrees with the exact solver") {
  for (int n = 3; n <= 10; ++n) {
    int tau = exact_tau(generate("cycle", {n}).graph, 2).k;
    CHECK(!color_cycle_2tone(n, tau - 1));
    auto f = color_cycle_2tone(n, tau);
    REQUIRE(f);
    CHECK(verify(generate("cycle", {n}).graph, *f, Mode::tone).valid);
  }
}

TEST_CASE("tree colorer") {
  auto p2 = color_tree_2tone(generate("path", {2}).graph);
  CHECK(p2.k == 4);
  CHECK(p2.labeling.labels() == parse_labels({{1, 2}, {3, 4}}));
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto s = color_tree_2tone(star);
  CHECK(s.k == 5);
  CHECK(verify(star, s.labeling, Mode::tone).valid);
  CHECK(color_tree_2tone(generate("path", {3}).graph).k == 5);
  CHECK(code_of([] { color_tree_2tone(Graph(1, {})); }) == "trivial-tree");
  CHECK(code_of([] { color_tree_2tone(generate("cycle", {4}).graph); }) == "not-a-tree");
  for (int d = 1; d <= 40; ++d) CHECK(tree_tau_formula(d) == oracle::tree_formula_float(d));
}

TEST_CASE("classification of small graphs") {
  CHECK(classify_subcubic_outerplanar(generate("cycle", {5}).graph).tau_class == 5);
  auto c7 = classify_subcubic_outerplanar(generate("cycle", {7}).graph);
  CHECK(c7.tau_class == 6);
  CHECK(c7.witness == WitnessKind::c7);
  CHECK(c7.witness_vertices.size() == 7);
  auto k = classify_subcubic_outerplanar(generate("k4e", {}).graph);
  CHECK(k.tau_class == 7);
  CHECK(k.witness == WitnessKind::k4e);
  CHECK(code_of([] { classify_subcubic_outerplanar(generate("path", {2}).graph); }) == "too-small");
  CHECK(code_of([] { classify_subcubic_outerplanar(Graph(4, {{0, 1}, {2, 3}})); }) == "disconnected");
  CHECK(code_of([] { classify_subcubic_outerplanar(generate("complete", {5}).graph); }) == "not-subcubic");
  CHECK(code_of([] { classify_subcubic_outerplanar(generate("complete", {4}).graph); }) == "not-outerplanar");
}

TEST_CASE("outerplanar colorer on the small named graphs") {
  auto c5 = color_subcubic_outerplanar(embed(generate("cycle", {5})), OuterplanarTarget::tone5);
  CHECK(c5.k == 5);
  CHECK(verify(generate("cycle", {5}).graph, c5.labeling, Mode::tone).valid);

  auto k4e = generate("k4e", {});
  auto a = color_subcubic_outerplanar(embed(k4e), OuterplanarTarget::automatic);
  CHECK(a.k == 7);
  CHECK(verify(k4e.graph, a.labeling, Mode::tone).valid);
  CHECK(a.labeling.colors_used() <= 7);

  auto fig1 = generate("fig1", {});
  auto t = color_subcubic_outerplanar(embed(fig1), OuterplanarTarget::threegood11);
  CHECK(t.k == 11);
  CHECK(verify(fig1.graph, t.labeling, Mode::three_good).valid);

  // Triangle with a pendant edge.
  Graph tri(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto g6 = color_subcubic_outerplanar({tri, {0, 1, 2, 3}}, OuterplanarTarget::good6);
  CHECK(g6.k == 6);
  CHECK(verify(tri, g6.labeling, Mode::good).valid);

  CHECK(code_of([&] { color_subcubic_outerplanar(embed(k4e), OuterplanarTarget::good6); }) == "contains-k4e");
  CHECK(code_of([&] { color_subcubic_outerplanar(embed(fig1), OuterplanarTarget::tone5); }) == "forbidden-cycle");
}

TEST_CASE("outerplanar colorer on random instances and trace replay") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    CAPTURE(seed);
    auto b = generate("outerplanar", {5 + static_cast<int>(seed % 30), 0, seed % 2 ? "long" : "any"}, seed);
    auto cls = classify_subcubic_outerplanar(b.graph, b.outer_order);
    auto a = color_subcubic_outerplanar(embed(b), OuterplanarTarget::automatic);
    CHECK(a.k == cls.tau_class);
    CHECK(verify(b.graph, a.labeling, Mode::tone).valid);
    CHECK(a.labeling.colors_used() <= a.k);
    CHECK(replay(a.trace, b.graph.order()) == b.graph);

    auto three = color_subcubic_outerplanar(embed(b), OuterplanarTarget::threegood11);
    CHECK(verify(b.graph, three.labeling, Mode::three_good).valid);
    CHECK(three.labeling.colors_used() <= 11);
    CHECK(replay(three.trace, b.graph.order()) == b.graph);

    if (!cls.report.has_k4e) {
      auto good = color_subcubic_outerplanar(embed(b), OuterplanarTarget::good6);
      CHECK(verify(b.graph, good.labeling, Mode::good).valid);
      CHECK(good.labeling.colors_used() <= 6);
      CHECK(replay(good.trace, b.graph.order()) == b.graph);
    }
    if (cls.tau_class == 5) {
      auto five = color_subcubic_outerplanar(embed(b), OuterplanarTarget::tone5);
      CHECK(verify(b.graph, five.labeling, Mode::tone).valid);
      CHECK(five.labeling.colors_used() <= 5);
    }
  }
}

TEST_CASE("cubic Halin colorer") {
  auto six = enumerate_cubic_halin(6);
  REQUIRE(six.size() == 2);
  const HalinStructure& h6 = six.back();
  REQUIRE(h6.graph.order() == 6);
  auto c = color_cubic_halin7(h6);
  CHECK(verify(h6.graph, c.labeling, Mode::tone).valid);
  CHECK(c.labeling.colors_used() <= 7);
  CHECK(exact_tau(h6.graph, 2).k <= c.labeling.colors_used());
  CHECK(code_of([&] { color_cubic_halin7(six.front()); }) == "too-small");
  CHECK(code_of([&] { color_cubic_halin7(halin_from(generate("wheel", {0, 5}))); }) == "not-cubic");

  auto b = generate("cubicHalin", {30}, 7);
  auto r = color_cubic_halin7(halin_from(b));
  CHECK(verify(b.graph, r.labeling, Mode::tone).valid);
  CHECK(r.labeling.colors_used() <= 7);
}

TEST_CASE("general Halin colorer") {
  CHECK(halin_bound(3) == 10);
  CHECK(halin_bound(8) == 10);
  CHECK(halin_bound(12) == 11);
  CHECK(halin_bound(17) == 12);
  auto w5 = generate("wheel", {0, 5});
  auto cw = color_halin(halin_from(w5));
  CHECK(verify(w5.graph, cw.labeling, Mode::tone).valid);
  CHECK(cw.labeling.colors_used() <= 10);

  auto h6 = enumerate_cubic_halin(6).back();
  auto c6 = color_halin(h6);
  CHECK(verify(h6.graph, c6.labeling, Mode::tone).valid);
  CHECK(c6.labeling.colors_used() <= 10);

  auto b = generate("halin", {40, 12}, 3);
  CHECK(b.graph.max_degree() == 12);
  auto c = color_halin(halin_from(b));
  CHECK(verify(b.graph, c.labeling, Mode::tone).valid);
  CHECK(c.labeling.colors_used() <= 11);
}

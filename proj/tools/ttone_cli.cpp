#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ttone/bounds.hpp"
#include "ttone/classify.hpp"
#include "ttone/errors.hpp"
#include "ttone/exact.hpp"
#include "ttone/generators.hpp"
#include "ttone/halin.hpp"
#include "ttone/halin_colorer.hpp"
#include "ttone/io.hpp"
#include "ttone/outerplanar_colorer.hpp"
#include "ttone/scan.hpp"
#include "ttone/verify.hpp"

using namespace ttone;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitFailed = 2;
constexpr int kExitBudget = 3;

GraphBundle load_graph(const std::string& path) { return parse_graph_file(read_text_file(path)); }

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorKind::invalid_input, "bad-range", "range must look like A..B");
  try {
    std::size_t used = 0;
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (lo > hi) fail(ErrorKind::invalid_input, "bad-range", "empty range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    fail(ErrorKind::invalid_input, "bad-range", "range must look like A..B");
  }
}

OuterplaneEmbedding embedding_of(const GraphBundle& b) {
  if (b.outer_order) return {b.graph, *b.outer_order};
  if (b.graph.order() <= 10 && b.graph.connected()) {
    if (auto order = find_outer_order(b.graph)) return {b.graph, *order};
    fail(ErrorKind::precondition, "not-outerplanar", "graph is not outerplanar");
  }
  fail(ErrorKind::precondition, "embedding-required", "graph file has no outer_order");
}

HalinStructure halin_of(const GraphBundle& b) {
  if (!b.tree_edges || !b.leaf_order)
    fail(ErrorKind::precondition, "halin-required", "graph file has no tree_edges/leaf_order");
  return validate_halin(b.graph, *b.tree_edges, *b.leaf_order);
}

int exact_value(const Graph& g, int t, SearchBudget budget) { return exact_tau(g, t, budget).k; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-tone coloring toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a graph file for a named family");
  std::string family, gen_out, faces = "any";
  int gen_n = 0, gen_d = 0;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("--family", family)->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--d", gen_d);
  gen->add_option("--faces", faces, "outerplanar face lengths: any or long");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out)->required();

  // color
  auto* col = app.add_subcommand("color", "color a graph constructively and self-check");
  int col_t = 2;
  std::string method, col_in, col_out;
  std::uint64_t col_nodes = SearchBudget{}.max_nodes;
  col->add_option("--t", col_t)->required();
  col->add_option("--method", method)->required();
  col->add_option("--in", col_in)->required();
  col->add_option("--out", col_out)->required();
  col->add_option("--max-nodes", col_nodes, "node budget for the exact k = 7 case");

  // exact
  auto* ex = app.add_subcommand("exact", "compute tau_t by backtracking");
  int ex_t = 2;
  std::string ex_in, ex_out;
  std::uint64_t ex_nodes = SearchBudget{}.max_nodes;
  ex->add_option("--t", ex_t)->required();
  ex->add_option("--in", ex_in)->required();
  ex->add_option("--out", ex_out, "witness coloring file");
  ex->add_option("--max-nodes", ex_nodes);

  // verify
  auto* ver = app.add_subcommand("verify", "check a coloring file against a graph");
  int ver_t = 2;
  std::string ver_mode, ver_graph, ver_col;
  ver->add_option("--t", ver_t)->required();
  ver->add_option("--mode", ver_mode)->required();
  ver->add_option("--graph", ver_graph)->required();
  ver->add_option("--coloring", ver_col)->required();

  // classify
  auto* cls = app.add_subcommand("classify", "2-tone class of a subcubic outerplanar graph");
  std::string cls_in;
  cls->add_option("--in", cls_in)->required();

  // table
  auto* tab = app.add_subcommand("table", "exact values next to closed forms");
  std::string tab_name, tab_range;
  std::uint64_t tab_nodes = SearchBudget{}.max_nodes;
  tab->add_option("--name", tab_name)->required();
  tab->add_option("--range", tab_range)->required();
  tab->add_option("--max-nodes", tab_nodes);

  // scan
  auto* sc = app.add_subcommand("scan", "search small instances for conjecture counterexamples");
  std::string sc_which, sc_report;
  ScanParams sp;
  std::uint64_t sc_nodes = sp.budget.max_nodes;
  sc->add_option("--conjecture", sc_which)->required();
  sc->add_option("--max-n", sp.max_n)->required();
  sc->add_option("--count", sp.sample_count)->required();
  sc->add_option("--seed", sp.seed)->required();
  sc->add_option("--report", sc_report)->required();
  sc->add_option("--t-max", sp.t_max);
  sc->add_option("--jobs", sp.jobs);
  sc->add_option("--max-nodes", sc_nodes, "node budget per instance and t");

  // export
  auto* exp = app.add_subcommand("export", "write a rendering format");
  bool dot = false;
  std::string exp_in, exp_out;
  exp->add_flag("--dot", dot)->required();
  exp->add_option("--in", exp_in)->required();
  exp->add_option("--out", exp_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*gen) {
      GraphBundle b = generate(family, {gen_n, gen_d, faces}, gen_seed);
      write_text_file(gen_out, format_graph_file(b));
      std::cout << "n=" << b.graph.order() << " m=" << b.graph.size() << "\n";
      return 0;
    }

    if (*col) {
      GraphBundle b = load_graph(col_in);
      Labeling f;
      Mode mode = Mode::tone;
      int want_t = method == "threegood11" ? 3 : 2;
      if (col_t != want_t)
        fail(ErrorKind::invalid_input, "bad-params", "method " + method + " produces t = " + std::to_string(want_t));
      int k = 0;
      if (method == "halin7" || method == "halin") {
        HalinStructure h = halin_of(b);
        HalinColoring hc = method == "halin7" ? color_cubic_halin7(h) : color_halin(h);
        f = hc.labeling;
        k = hc.k;
      } else {
        OuterplanarColoring oc =
            color_subcubic_outerplanar(embedding_of(b), parse_outerplanar_target(method), SearchBudget{col_nodes});
        f = oc.labeling;
        mode = oc.mode;
        k = oc.k;
      }
      VerificationReport rep = verify(b.graph, f, mode);
      if (!rep.valid) {
        std::cerr << "self-check failed: " << rep.violations.size() << " violations\n";
        return kExitFailed;
      }
      write_text_file(col_out, format_coloring_file(f));
      std::cout << k << "\n";
      return 0;
    }

    if (*ex) {
      GraphBundle b = load_graph(ex_in);
      TauResult r = exact_tau(b.graph, ex_t, SearchBudget{ex_nodes});
      if (!ex_out.empty()) write_text_file(ex_out, format_coloring_file(r.witness));
      std::cout << r.k << "\n";
      return 0;
    }

    if (*ver) {
      GraphBundle b = load_graph(ver_graph);
      Labeling f = parse_coloring_file(read_text_file(ver_col));
      if (f.t() != ver_t) fail(ErrorKind::invalid_input, "bad-params", "coloring file has a different t");
      VerificationReport rep = verify(b.graph, f, parse_mode(ver_mode));
      if (rep.valid) {
        std::cout << "valid\n";
        return 0;
      }
      std::cout << "invalid: " << rep.violations.size() << " violations\n";
      for (const auto& v : rep.violations)
        std::cout << "  " << v.u << " " << v.v << " distance=" << v.distance << " shared=" << v.shared
                  << " rule=" << to_string(v.rule) << "\n";
      return kExitFailed;
    }

    if (*cls) {
      GraphBundle b = load_graph(cls_in);
      ClassificationResult r = classify_subcubic_outerplanar(b.graph, b.outer_order);
      std::cout << r.tau_class << "\n";
      std::cout << "witness " << to_string(r.witness);
      for (Vertex v : r.witness_vertices) std::cout << " " << v;
      std::cout << "\n";
      return 0;
    }

    if (*tab) {
      auto [lo, hi] = parse_range(tab_range);
      SearchBudget budget{tab_nodes};
      std::ostringstream out;
      if (tab_name == "cycles") {
        if (lo < 3) fail(ErrorKind::invalid_input, "bad-range", "cycles need n >= 3");
        out << "n,exact,formula\n";
        for (int n = lo; n <= hi; ++n)
          out << n << ',' << exact_value(generate("cycle", {n, 0, "any"}).graph, 2, budget) << ','
              << cycle_tau_formula(n) << '\n';
      } else if (tab_name == "wheels") {
        if (lo < 3) fail(ErrorKind::invalid_input, "bad-range", "wheels need d >= 3");
        out << "d,exact,formula\n";
        for (int d = lo; d <= hi; ++d)
          out << d << ',' << exact_value(generate("wheel", {0, d, "any"}).graph, 2, budget) << ','
              << wheel_tau_formula(d) << '\n';
      } else if (tab_name == "trees") {
        if (lo < 1) fail(ErrorKind::invalid_input, "bad-range", "stars need delta >= 1");
        out << "delta,exact,formula\n";
        for (int d = lo; d <= hi; ++d) {
          std::vector<Edge> e;
          for (int i = 1; i <= d; ++i) e.push_back({0, i});
          out << d << ',' << exact_value(Graph(d + 1, e), 2, budget) << ',' << tree_tau_formula(d) << '\n';
        }
      } else {
        fail(ErrorKind::invalid_input, "unknown-table", "table must be cycles, wheels or trees");
      }
      std::cout << out.str();
      return 0;
    }

    if (*sc) {
      sp.budget = SearchBudget{sc_nodes};
      ScanReport r = scan_conjecture(parse_conjecture(sc_which), sp);
      write_text_file(sc_report, format_scan_csv(r));
      std::cout << "instances=" << r.rows.size() << " flagged=" << r.flagged << " budget_exhausted=" << r.exhausted
                << "\n";
      return 0;
    }

    if (*exp) {
      write_text_file(exp_out, format_dot(load_graph(exp_in)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::invalid_input: return kExitInvalid;
      case ErrorKind::precondition: return kExitFailed;
      case ErrorKind::budget_exhausted: return kExitBudget;
      case ErrorKind::internal: return 70;
    }
  }
  return kExitInvalid;
}

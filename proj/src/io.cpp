#include "ttone/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ttone/errors.hpp"

namespace ttone {

using nlohmann::json;

namespace {

json pairs(const std::vector<Edge>& edges) {
  json a = json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

std::vector<Edge> read_pairs(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j.get_ref<const json::array_t&>()) {
    if (!e.is_array() || e.size() != 2) fail(ErrorKind::invalid_input, "malformed-graph-file", "edge must be a pair");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

std::string emit(const std::vector<std::pair<std::string, json>>& fields) {
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += "  " + json(fields[i].first).dump() + ": " + fields[i].second.dump();
    out += i + 1 < fields.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace

std::string format_graph_file(const GraphBundle& b) {
  std::vector<std::pair<std::string, json>> f;
  f.emplace_back("n", b.graph.order());
  f.emplace_back("edges", pairs(b.graph.edges()));
  if (b.outer_order) f.emplace_back("outer_order", *b.outer_order);
  if (b.tree_edges) f.emplace_back("tree_edges", pairs(*b.tree_edges));
  if (b.leaf_order) f.emplace_back("leaf_order", *b.leaf_order);
  if (!b.family.empty()) {
    f.emplace_back("family", b.family);
    f.emplace_back("params", json{{"n", b.params.n}, {"d", b.params.d}, {"faces", b.params.faces}});
  }
  if (!b.face_sizes.empty()) f.emplace_back("face_sizes", b.face_sizes);
  if (b.seed) f.emplace_back("seed", *b.seed);
  return emit(f);
}

GraphBundle parse_graph_file(const std::string& text) {
  GraphBundle b;
  json j;
  try {
    j = json::parse(text);
    if (!j.is_object()) fail(ErrorKind::invalid_input, "malformed-graph-file", "graph file must be a JSON object");
    static const std::set<std::string> known{"n", "edges", "outer_order", "tree_edges", "leaf_order",
                                             "family", "params", "face_sizes", "seed"};
    for (const auto& [key, value] : j.items())
      if (!known.count(key)) fail(ErrorKind::invalid_input, "malformed-graph-file", "unknown field: " + key);
    int n = j.at("n").get<int>();
    if (n < 0) fail(ErrorKind::invalid_input, "malformed-graph-file", "n must be non-negative");
    std::vector<Edge> edges = read_pairs(j.at("edges"));
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    b.graph = Graph(n, edges);
    if (j.contains("outer_order")) b.outer_order = j["outer_order"].get<std::vector<Vertex>>();
    if (j.contains("tree_edges")) b.tree_edges = read_pairs(j["tree_edges"]);
    if (j.contains("leaf_order")) b.leaf_order = j["leaf_order"].get<std::vector<Vertex>>();
    if (j.contains("family")) b.family = j["family"].get<std::string>();
    if (j.contains("params")) {
      const json& p = j["params"];
      b.params.n = p.value("n", 0);
      b.params.d = p.value("d", 0);
      b.params.faces = p.value("faces", std::string("any"));
    }
    if (j.contains("face_sizes")) b.face_sizes = j["face_sizes"].get<std::vector<int>>();
    if (j.contains("seed")) b.seed = j["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_input, "malformed-graph-file", e.what());
  }
  if (b.tree_edges.has_value() != b.leaf_order.has_value())
    fail(ErrorKind::invalid_input, "malformed-graph-file", "tree_edges and leaf_order come together");
  return b;
}

std::string format_coloring_file(const Labeling& f) {
  json labels = json::array();
  for (Label l : f.labels()) labels.push_back(l.colors());
  return emit({{"t", f.t()}, {"k", f.k()}, {"labels", labels}});
}

Labeling parse_coloring_file(const std::string& text) {
  try {
    json j = json::parse(text);
    int t = j.at("t").get<int>();
    int k = j.at("k").get<int>();
    if (t < 1 || k < 1 || k > kMaxColors)
      fail(ErrorKind::invalid_input, "malformed-coloring-file", "t and k must lie in 1..64");
    const auto& labels = j.at("labels").get_ref<const json::array_t&>();
    Labeling f(static_cast<int>(labels.size()), t, k);
    for (std::size_t v = 0; v < labels.size(); ++v) {
      std::vector<Color> colors = labels[v].get<std::vector<Color>>();
      for (Color c : colors)
        if (c < 1 || c > kMaxColors)
          fail(ErrorKind::invalid_input, "malformed-coloring-file", "color out of range 1..64");
      std::vector<Color> sorted = colors;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorKind::invalid_input, "malformed-coloring-file", "repeated color in a label");
      f.set(static_cast<Vertex>(v), Label(colors));
    }
    return f;
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_input, "malformed-coloring-file", e.what());
  }
}

std::string format_dot(const GraphBundle& b) {
  std::set<Edge> tree;
  if (b.tree_edges) tree.insert(b.tree_edges->begin(), b.tree_edges->end());
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < b.graph.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : b.graph.edges()) {
    out << "  " << u << " -- " << v;
    if (tree.count({u, v})) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::invalid_input, "unreadable-file", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::invalid_input, "unwritable-file", "cannot write " + path);
  out << text;
  if (!out) fail(ErrorKind::invalid_input, "unwritable-file", "write failed for " + path);
}

}  // namespace ttone

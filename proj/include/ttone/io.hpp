#pragma once

#include <string>

#include "ttone/generators.hpp"
#include "ttone/labeling.hpp"

namespace ttone {

// Graph file: a JSON object with one field per line, in this order:
// n, edges, outer_order?, tree_edges?, leaf_order?, family?, params?, face_sizes?, seed?
std::string format_graph_file(const GraphBundle& b);
// Throws invalid_input "malformed-graph-file" (or the graph constructor's codes).
GraphBundle parse_graph_file(const std::string& text);

// Coloring file: {"t", "k", "labels"} with one field per line; labels[v] is
// the ascending color list of vertex v.
std::string format_coloring_file(const Labeling& f);
// Throws invalid_input "malformed-coloring-file".
Labeling parse_coloring_file(const std::string& text);

// Graphviz "graph" document; tree edges are drawn bold.
std::string format_dot(const GraphBundle& b);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ttone

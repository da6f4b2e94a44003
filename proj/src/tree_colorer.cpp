#include "ttone/tree_colorer.hpp"

#include "ttone/bounds.hpp"
#include "ttone/errors.hpp"
#include "ttone/extension.hpp"
#include "ttone/verify.hpp"

namespace ttone {

TreeColoring color_tree_2tone(const Graph& tree) {
  if (tree.order() < 2) fail(ErrorKind::precondition, "trivial-tree", "tree needs at least two vertices");
  if (tree.size() != tree.order() - 1 || !tree.connected())
    fail(ErrorKind::precondition, "not-a-tree", "input graph is not a tree");
  TreeColoring out;
  out.k = tree_tau_formula(tree.max_degree());
  out.labeling = Labeling(tree.order(), 2, out.k);
  const auto candidates = all_labels(2, out.k);
  DistanceTable dist(tree, 2);
  std::vector<Vertex> queue{0};
  std::vector<char> seen(tree.order(), 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    // Free colors exclude neighbors' labels; colored second neighbors block their exact labels.
    Label l = first_fitting(dist, out.labeling, v, candidates, Mode::tone);
    if (l.empty()) fail(ErrorKind::internal, "tree-coloring", "no candidate label left");
    out.labeling.set(v, l);
    for (Vertex w : tree.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  if (!verify(tree, out.labeling, Mode::tone).valid)
    fail(ErrorKind::internal, "tree-coloring", "greedy tree coloring is invalid");
  return out;
}

}  // namespace ttone

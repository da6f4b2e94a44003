#include "ttone/classify.hpp"

#include "ttone/errors.hpp"
#include "ttone/outerplane.hpp"

namespace ttone {

std::string to_string(WitnessKind w) {
  switch (w) {
    case WitnessKind::none: return "none";
    case WitnessKind::c3: return "C3";
    case WitnessKind::c4: return "C4";
    case WitnessKind::c7: return "C7";
    case WitnessKind::k4e: return "K4-e";
  }
  return "?";
}

ClassificationResult classify_subcubic_outerplanar(const Graph& g, const std::optional<std::vector<Vertex>>& outer_order) {
  if (g.order() < 3) fail(ErrorKind::precondition, "too-small", "classification needs n >= 3");
  if (!g.connected()) fail(ErrorKind::precondition, "disconnected", "classification needs a connected graph");
  if (g.max_degree() > 3) fail(ErrorKind::precondition, "not-subcubic", "maximum degree exceeds three");
  if (outer_order) {
    validate_outerplane(g, *outer_order);
  } else {
    if (g.order() > 10)
      fail(ErrorKind::precondition, "embedding-required", "graphs above 10 vertices need an outer order");
    if (!find_outer_order(g)) fail(ErrorKind::precondition, "not-outerplanar", "graph is not outerplanar");
  }

  ClassificationResult r;
  r.report = detect_forbidden(g);
  if (auto k = find_k4e(g)) {
    r.tau_class = 7;
    r.witness = WitnessKind::k4e;
    r.witness_vertices = *k;
    return r;
  }
  r.tau_class = 6;
  for (auto [len, kind] : {std::pair{3, WitnessKind::c3}, std::pair{4, WitnessKind::c4}, std::pair{7, WitnessKind::c7}})
    if (auto c = find_cycle(g, len)) {
      r.witness = kind;
      r.witness_vertices = *c;
      return r;
    }
  r.tau_class = 5;
  return r;
}

}  // namespace ttone

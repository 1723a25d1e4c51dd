#pragma once
// Graph transformations whose solution structure mirrors the source
// instance, with provenance maps recording how gadget elements correspond
// to source elements.

#include <string>
#include <utility>
#include <vector>

#include "fascount/graphs.hpp"

namespace fascount {

enum class GadgetKind { karp, subdivision, line };

// Correspondence between source elements and gadget elements. Which fields
// are populated depends on kind; to_text() renders a stable key-value
// listing (one record per line, fixed order) suitable as a sidecar file.
struct GadgetMap {
  GadgetKind kind = GadgetKind::karp;
  int ell = 0;  // karp, subdivision
  int source_vertices = 0;
  int source_count = 0;  // edges (karp) or arcs (subdivision, line)
  int gadget_vertices = 0;
  int gadget_arcs = 0;

  std::vector<Arc> vertex_arc;                  // karp: source vertex -> its vertex arc
  std::vector<std::vector<int>> edge_vertices;  // karp: source edge -> replica vertex ids
  std::vector<std::vector<int>> path;           // subdivision: source arc -> vertex chain (ell+1 ids)
  std::vector<int> arc_vertex;                  // line: source arc -> gadget vertex

  std::string to_text() const;
};

// Vertex cover to feedback arc set instance. Vertex v becomes the arc
// (v, n+v); edge e = {u,w}, u < w, becomes ell two-arc chains per direction
// through fresh replica vertices: n+u -> r -> w and n+w -> r' -> u. Vertex
// ids: v and n+v for source vertex v, then 2n + e*2*ell + side*ell + j for
// replica j of side 0 (the u->w chains) and side 1 of edge index e.
// Sizes: 2n + 2*ell*|E| vertices, n + 4*ell*|E| arcs. Requires ell >= 1.
std::pair<Digraph, GadgetMap> karp_gadget(const UGraph& g, int ell);

// Each arc becomes a directed path of ell arcs through ell-1 fresh internal
// vertices; ell = 1 returns the input unchanged. Internal vertex t of arc
// index a gets id n + a*(ell-1) + (t-1), t = 1..ell-1.
// Sizes: n + (ell-1)*|A| vertices, ell*|A| arcs. Requires ell >= 1.
std::pair<Digraph, GadgetMap> subdivision_gadget(const Digraph& d, int ell);

// Line digraph: one vertex per arc (vertex id = arc index in d.arcs()
// order), one arc per composable pair (a, b) with head(a) == tail(b).
std::pair<Digraph, GadgetMap> line_digraph(const Digraph& d);

}  // namespace fascount

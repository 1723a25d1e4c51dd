#include "fascount/gadgets.hpp"

#include <stdexcept>

namespace fascount {

namespace {

void append_ids(std::string& out, const char* key, int index, const std::vector<int>& ids) {
  out += key;
  out += " " + std::to_string(index);
  for (int id : ids) out += " " + std::to_string(id);
  out += "\n";
}

}  // namespace

std::string GadgetMap::to_text() const {
  std::string out;
  switch (kind) {
    case GadgetKind::karp:
      out += "kind karp\n";
      break;
    case GadgetKind::subdivision:
      out += "kind subdivision\n";
      break;
    case GadgetKind::line:
      out += "kind line\n";
      break;
  }
  if (kind != GadgetKind::line) out += "ell " + std::to_string(ell) + "\n";
  out += "source_vertices " + std::to_string(source_vertices) + "\n";
  out += (kind == GadgetKind::karp ? "source_edges " : "source_arcs ") + std::to_string(source_count) + "\n";
  out += "gadget_vertices " + std::to_string(gadget_vertices) + "\n";
  out += "gadget_arcs " + std::to_string(gadget_arcs) + "\n";
  for (size_t v = 0; v < vertex_arc.size(); ++v)
    out += "vertex_arc " + std::to_string(v) + " " + std::to_string(vertex_arc[v].from) + " " +
           std::to_string(vertex_arc[v].to) + "\n";
  for (size_t e = 0; e < edge_vertices.size(); ++e) append_ids(out, "edge_vertices", static_cast<int>(e), edge_vertices[e]);
  for (size_t a = 0; a < path.size(); ++a) append_ids(out, "path", static_cast<int>(a), path[a]);
  for (size_t a = 0; a < arc_vertex.size(); ++a)
    out += "arc_vertex " + std::to_string(a) + " " + std::to_string(arc_vertex[a]) + "\n";
  return out;
}

std::pair<Digraph, GadgetMap> karp_gadget(const UGraph& g, int ell) {
  if (ell < 1) throw std::invalid_argument("karp_gadget requires ell >= 1");
  const int n = g.vertex_count();
  const int me = g.edge_count();

  GadgetMap map;
  map.kind = GadgetKind::karp;
  map.ell = ell;
  map.source_vertices = n;
  map.source_count = me;
  map.gadget_vertices = 2 * n + 2 * ell * me;
  map.gadget_arcs = n + 4 * ell * me;

  std::vector<Arc> arcs;
  arcs.reserve(map.gadget_arcs);
  map.vertex_arc.reserve(n);
  for (int v = 0; v < n; ++v) {
    arcs.push_back(Arc{v, n + v});
    map.vertex_arc.push_back(Arc{v, n + v});
  }
  map.edge_vertices.resize(me);
  for (int e = 0; e < me; ++e) {
    const int u = g.edge(e).a;  // canonical: u < w
    const int w = g.edge(e).b;
    for (int side = 0; side < 2; ++side)
      for (int j = 0; j < ell; ++j) {
        const int r = 2 * n + e * 2 * ell + side * ell + j;
        map.edge_vertices[e].push_back(r);
        if (side == 0) {  // chains carrying u -> w
          arcs.push_back(Arc{n + u, r});
          arcs.push_back(Arc{r, w});
        } else {  // chains carrying w -> u
          arcs.push_back(Arc{n + w, r});
          arcs.push_back(Arc{r, u});
        }
      }
  }
  return {Digraph(map.gadget_vertices, std::move(arcs)), std::move(map)};
}

std::pair<Digraph, GadgetMap> subdivision_gadget(const Digraph& d, int ell) {
  if (ell < 1) throw std::invalid_argument("subdivision_gadget requires ell >= 1");
  const int n = d.vertex_count();
  const int m = d.arc_count();

  GadgetMap map;
  map.kind = GadgetKind::subdivision;
  map.ell = ell;
  map.source_vertices = n;
  map.source_count = m;
  map.gadget_vertices = n + (ell - 1) * m;
  map.gadget_arcs = ell * m;

  std::vector<Arc> arcs;
  arcs.reserve(map.gadget_arcs);
  map.path.resize(m);
  for (int a = 0; a < m; ++a) {
    std::vector<int>& chain = map.path[a];
    chain.push_back(d.arc(a).from);
    for (int t = 1; t < ell; ++t) chain.push_back(n + a * (ell - 1) + (t - 1));
    chain.push_back(d.arc(a).to);
    for (size_t i = 0; i + 1 < chain.size(); ++i) arcs.push_back(Arc{chain[i], chain[i + 1]});
  }
  return {Digraph(map.gadget_vertices, std::move(arcs)), std::move(map)};
}

std::pair<Digraph, GadgetMap> line_digraph(const Digraph& d) {
  const int m = d.arc_count();

  GadgetMap map;
  map.kind = GadgetKind::line;
  map.source_vertices = d.vertex_count();
  map.source_count = m;
  map.gadget_vertices = m;

  std::vector<Arc> arcs;
  map.arc_vertex.resize(m);
  for (int a = 0; a < m; ++a) map.arc_vertex[a] = a;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (d.arc(a).to == d.arc(b).from) arcs.push_back(Arc{a, b});
  map.gadget_arcs = static_cast<int>(arcs.size());
  return {Digraph(m, std::move(arcs)), std::move(map)};
}

}  // namespace fascount

#pragma once
// Loopless digraphs and simple undirected graphs over dense 0-based vertex
// indices, the subset predicates everything else is defined against, a plain
// text interchange format, and deterministic seeded random generators.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fascount/errors.hpp"

namespace fascount {

struct Arc {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Undirected edge in canonical form: a < b always.
struct Edge {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of a fixed universe {0, .., universe-1}, packed into words.
// Used both for arc subsets (indices into Digraph::arcs()) and vertex
// subsets; the universe size is part of the value and must match the host
// graph in every predicate below.
class BitSet {
public:
  BitSet() = default;
  explicit BitSet(int universe);
  static BitSet of(int universe, std::span<const int> indices);

  int universe() const { return universe_; }
  int count() const;
  bool contains(int i) const;
  void set(int i);
  void reset(int i);
  bool subset_of(const BitSet& other) const;
  std::vector<int> indices() const;

  friend bool operator==(const BitSet&, const BitSet&) = default;

private:
  void check_index(int i) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

using ArcSet = BitSet;
using VertexSet = BitSet;

// Immutable after construction. Arcs are stored sorted lexicographically
// (from, then to); arc indices used by ArcSet refer to that order. Loops and
// duplicate arcs are rejected; antiparallel pairs (u,v),(v,u) are fine.
class Digraph {
public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int index) const { return arcs_[static_cast<size_t>(index)]; }
  // Index of `a` in arcs() order, or nullopt if absent.
  std::optional<int> arc_index(Arc a) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

// Simple undirected graph; edges stored canonical (a < b), sorted.
class UGraph {
public:
  UGraph() = default;
  UGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

  friend bool operator==(const UGraph&, const UGraph&) = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// True iff d has no directed cycle. The empty digraph is acyclic.
bool is_acyclic(const Digraph& d);

// True iff deleting exactly the arcs in `deleted` leaves d acyclic. This
// predicate is the ground truth for feedback arc set membership everywhere
// in the toolkit; `deleted` indexes d.arcs() and must have universe
// d.arc_count().
bool is_fas(const Digraph& d, const ArcSet& deleted);

// True iff every edge of g has at least one endpoint in `cover`.
bool is_vc(const UGraph& g, const VertexSet& cover);

// True iff deleting the vertices in `deleted` (with all incident arcs)
// leaves d acyclic.
bool is_fvs(const Digraph& d, const VertexSet& deleted);

// Builds an ArcSet over d from explicit arcs; throws std::invalid_argument
// if any of them is not an arc of d.
ArcSet arc_set(const Digraph& d, std::span<const Arc> arcs);

// Text format:
//   digraph <n> <m>          (or: graph <n> <m>)
//   <u> <v>                  (m lines; endpoints in [0, n))
// Lines whose first non-blank character is '#' are ignored. serialize()
// emits arcs/edges in their stored sorted order, one per line, with a
// trailing newline; parse(serialize(x)) == x.
std::string serialize(const Digraph& d);
std::string serialize(const UGraph& g);

Digraph parse_digraph(std::string_view text);
UGraph parse_ugraph(std::string_view text);
std::variant<Digraph, UGraph> parse_graph(std::string_view text);

// splitmix64; the fixed stepping/mixing constants make seeded corpora
// reproducible across platforms and releases.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next();
};

// floor(p * 2^64) computed exactly in integer arithmetic (no long-double
// detours), so every platform draws identical graphs. Requires 0 <= p < 1.
std::uint64_t probability_threshold(double p);

// Candidate arcs (u,v), u != v, are visited in lexicographic order and each
// consumes exactly one draw from SplitMix64{seed}; the arc is included iff
// draw < probability_threshold(p) (p == 1 includes everything). Requires
// 0 <= p <= 1.
Digraph random_digraph(int n, double p, std::uint64_t seed);

// Same scheme over candidate edges {u,v}, u < v, in lexicographic order.
UGraph random_ugraph(int n, double p, std::uint64_t seed);

}  // namespace fascount

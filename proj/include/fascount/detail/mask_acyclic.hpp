#pragma once
// Internal: mask-indexed acyclicity for enumeration sweeps. Arc subsets are
// uint64 masks over d.arcs() order, so instances are limited to 64 arcs
// (callers cap far lower). Only vertices incident to some arc are kept
// (compacted); isolated vertices never limit a sweep. Agreement with the
// public is_fas predicate is pinned by property tests.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fascount/errors.hpp"
#include "fascount/graphs.hpp"

namespace fascount::detail {

class MaskChecker {
public:
  explicit MaskChecker(const Digraph& d) {
    const int m = d.arc_count();
    if (m > 64)
      throw CapExceeded("mask sweep supports at most 64 arcs, instance has " + std::to_string(m));
    std::vector<int> label(d.vertex_count(), -1);
    auto touch = [&](int v) {
      if (label[v] < 0) label[v] = nv_++;
      return label[v];
    };
    for (const Arc& a : d.arcs()) {
      tail_.push_back(touch(a.from));
      head_.push_back(touch(a.to));
    }
    out_arcs_.assign(nv_, 0);
    for (int i = 0; i < m; ++i) out_arcs_[tail_[i]] |= std::uint64_t{1} << i;
  }

  // Kahn peeling restricted to the kept arcs.
  bool acyclic_kept(std::uint64_t kept) const {
    int indeg[64] = {0};
    for (std::uint64_t rem = kept; rem; rem &= rem - 1) ++indeg[head_[std::countr_zero(rem)]];
    int stack[64];
    int sp = 0;
    int peeled = 0;
    for (int v = 0; v < nv_; ++v)
      if (indeg[v] == 0) stack[sp++] = v;
    while (sp > 0) {
      int v = stack[--sp];
      ++peeled;
      for (std::uint64_t out = out_arcs_[v] & kept; out; out &= out - 1) {
        int h = head_[std::countr_zero(out)];
        if (--indeg[h] == 0) stack[sp++] = h;
      }
    }
    return peeled == nv_;
  }

private:
  int nv_ = 0;
  std::vector<int> tail_, head_;
  std::vector<std::uint64_t> out_arcs_;
};

// Acyclicity of the subgraph induced by the `alive` vertex mask, for
// digraphs given as out-neighbor masks (at most 32 vertices; arc count
// unlimited). Used by the vertex-deletion sweeps.
inline bool acyclic_induced(const std::vector<std::uint32_t>& out_nbr, std::uint32_t alive) {
  int indeg[32] = {0};
  for (std::uint32_t rem = alive; rem; rem &= rem - 1) {
    const int v = std::countr_zero(rem);
    for (std::uint32_t out = out_nbr[v] & alive; out; out &= out - 1) ++indeg[std::countr_zero(out)];
  }
  int stack[32];
  int sp = 0;
  int peeled = 0;
  int total = 0;
  for (std::uint32_t rem = alive; rem; rem &= rem - 1) {
    ++total;
    const int v = std::countr_zero(rem);
    if (indeg[v] == 0) stack[sp++] = v;
  }
  while (sp > 0) {
    const int v = stack[--sp];
    ++peeled;
    for (std::uint32_t out = out_nbr[v] & alive; out; out &= out - 1) {
      const int w = std::countr_zero(out);
      if (--indeg[w] == 0) stack[sp++] = w;
    }
  }
  return peeled == total;
}

}  // namespace fascount::detail

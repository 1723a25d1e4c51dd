#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "fascount/counters.hpp"
#include "fascount/detail/mask_acyclic.hpp"
#include "fascount/errors.hpp"
#include "fascount/graphs.hpp"

using namespace fascount;

namespace {

Digraph cycle(int n) {
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) arcs.push_back(Arc{v, (v + 1) % n});
  return Digraph(n, std::move(arcs));
}

Digraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back(Arc{u, v});
  return Digraph(n, std::move(arcs));
}

std::vector<mpz_class> z(std::vector<long> v) { return std::vector<mpz_class>(v.begin(), v.end()); }

// Every labeled digraph on n vertices, via arc-subset masks.
template <class Fn>
void for_each_digraph(int n, Fn&& fn) {
  std::vector<Arc> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) candidates.push_back(Arc{u, v});
  for (std::uint32_t mask = 0; mask < (1u << candidates.size()); ++mask) {
    std::vector<Arc> arcs;
    for (size_t i = 0; i < candidates.size(); ++i)
      if ((mask >> i) & 1) arcs.push_back(candidates[i]);
    fn(Digraph(n, std::move(arcs)));
  }
}

ArcSet set_from_mask(int m, std::uint64_t mask) {
  ArcSet s(m);
  for (int i = 0; i < m; ++i)
    if ((mask >> i) & 1) s.set(i);
  return s;
}

}  // namespace

TEST_CASE("brute force spectrum fixtures") {
  CHECK(fas_spectrum_bruteforce(Digraph(0, {})).coefficients() == z({1}));
  CHECK(fas_spectrum_bruteforce(Digraph(3, {})).coefficients() == z({1}));
  CHECK(fas_spectrum_bruteforce(Digraph(2, {Arc{0, 1}})).coefficients() == z({1, 1}));
  CHECK(fas_spectrum_bruteforce(Digraph(3, {Arc{0, 1}, Arc{1, 2}})).coefficients() == z({1, 2, 1}));
  CHECK(fas_spectrum_bruteforce(cycle(2)).coefficients() == z({0, 2, 1}));
  CHECK(fas_spectrum_bruteforce(cycle(3)).coefficients() == z({0, 3, 3, 1}));
  CHECK(fas_spectrum_bruteforce(cycle(4)).coefficients() == z({0, 4, 6, 4, 1}));
  CHECK(fas_count_bruteforce(cycle(2)) == 3);
  CHECK(fas_count_bruteforce(cycle(4)) == 15);
}

TEST_CASE("brute force refuses oversized instances") {
  Caps caps;
  CHECK_THROWS_AS(fas_spectrum_bruteforce(complete_digraph(6), caps), CapExceeded);  // 30 arcs > 24
  caps.brute_force_arcs = 31;  // beyond the hard ceiling
  CHECK_THROWS_AS(fas_spectrum_bruteforce(cycle(2), caps), CapExceeded);
  caps.brute_force_arcs = 30;
  CHECK_NOTHROW(fas_spectrum_bruteforce(cycle(2), caps));
}

TEST_CASE("fixed cardinality brute force") {
  CHECK(card_fas_bruteforce(cycle(4), 0) == 0);
  CHECK(card_fas_bruteforce(cycle(4), 1) == 4);
  CHECK(card_fas_bruteforce(cycle(4), 2) == 6);
  CHECK(card_fas_bruteforce(cycle(4), 4) == 1);
  CHECK(card_fas_bruteforce(cycle(4), 5) == 0);
  CHECK(card_fas_bruteforce(cycle(4), -1) == 0);
  CHECK(card_fas_bruteforce(Digraph(1, {}), 0) == 1);
  // reaches past the full-sweep cap when C(m, k) is small
  CHECK(card_fas_bruteforce(complete_digraph(6), 0) == 0);
  CHECK_THROWS_AS(card_fas_bruteforce(cycle(4), 2, Caps{}, 5), CapExceeded);
}

TEST_CASE("dp spectrum fixtures") {
  CHECK(fas_spectrum_dp(Digraph(0, {})).coefficients() == z({1}));
  CHECK(fas_spectrum_dp(cycle(2)).coefficients() == z({0, 2, 1}));
  CHECK(fas_spectrum_dp(cycle(3)).coefficients() == z({0, 3, 3, 1}));
  CHECK(fas_spectrum_dp(cycle(4)).coefficients() == z({0, 4, 6, 4, 1}));
  CHECK(fas_spectrum_dp(Digraph(3, {Arc{0, 1}, Arc{1, 2}, Arc{0, 2}})).coefficients() == z({1, 3, 3, 1}));
}

TEST_CASE("dp agrees with brute force on every digraph with 3 vertices") {
  for_each_digraph(3, [](const Digraph& d) {
    CHECK(fas_spectrum_dp(d) == fas_spectrum_bruteforce(d));
  });
}

TEST_CASE("dp agrees with brute force on seeded instances") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Digraph d = random_digraph(1 + static_cast<int>(seed % 6), 0.5, seed);
    if (d.arc_count() > 24) continue;
    CHECK(fas_spectrum_dp(d) == fas_spectrum_bruteforce(d));
  }
}

TEST_CASE("dp refuses oversized instances") {
  CHECK_THROWS_AS(fas_spectrum_dp(Digraph(17, {})), CapExceeded);
}

TEST_CASE("vertex cover spectrum fixtures") {
  CHECK(vc_spectrum(UGraph(0, {})).coefficients() == z({1}));
  CHECK(vc_spectrum(UGraph(2, {})).coefficients() == z({1, 2, 1}));
  CHECK(vc_spectrum(UGraph(2, {Edge{0, 1}})).coefficients() == z({0, 2, 1}));
  CHECK(vc_spectrum(UGraph(3, {Edge{0, 1}, Edge{1, 2}})).coefficients() == z({0, 1, 3, 1}));
  UGraph tri(3, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}});
  CHECK(vc_spectrum(tri).coefficients() == z({0, 0, 3, 1}));
  CHECK_THROWS_AS(vc_spectrum(UGraph(25, {})), CapExceeded);
}

TEST_CASE("vertex cover spectrum against the predicate") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    UGraph g = random_ugraph(6, 0.5, seed);
    CountSpectrum s = vc_spectrum(g);
    std::vector<long> direct(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << g.vertex_count()); ++mask) {
      VertexSet cover(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1) cover.set(v);
      if (is_vc(g, cover)) ++direct[std::popcount(mask)];
    }
    CHECK(s.coefficients() == z(std::move(direct)));
  }
}

TEST_CASE("feedback vertex set spectrum fixtures") {
  CHECK(fvs_spectrum(Digraph(2, {Arc{0, 1}})).coefficients() == z({1, 2, 1}));
  CHECK(fvs_spectrum(cycle(2)).coefficients() == z({0, 2, 1}));
  CHECK(fvs_spectrum(cycle(3)).coefficients() == z({0, 3, 3, 1}));
  CHECK_THROWS_AS(fvs_spectrum(Digraph(25, {})), CapExceeded);
}

TEST_CASE("feedback vertex set spectrum against the predicate") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Digraph d = random_digraph(5, 0.5, seed);
    CountSpectrum s = fvs_spectrum(d);
    std::vector<long> direct(static_cast<size_t>(d.vertex_count()) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << d.vertex_count()); ++mask) {
      VertexSet del(d.vertex_count());
      for (int v = 0; v < d.vertex_count(); ++v)
        if ((mask >> v) & 1) del.set(v);
      if (is_fvs(d, del)) ++direct[std::popcount(mask)];
    }
    CHECK(s.coefficients() == z(std::move(direct)));
  }
}

TEST_CASE("minimal feedback arc set counts") {
  CHECK(minimal_fas_count(Digraph(3, {Arc{0, 1}, Arc{1, 2}})) == 1);  // only the empty set
  CHECK(minimal_fas_count(cycle(2)) == 2);
  CHECK(minimal_fas_count(cycle(3)) == 3);
  Digraph two_cycles(4, {Arc{0, 1}, Arc{1, 0}, Arc{2, 3}, Arc{3, 2}});
  CHECK(minimal_fas_count(two_cycles) == 4);
  CHECK_THROWS_AS(minimal_fas_count(complete_digraph(6)), CapExceeded);
}

TEST_CASE("supersets of feedback arc sets are feedback arc sets") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Digraph d = random_digraph(4, 0.6, seed);
    const int m = d.arc_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (!is_fas(d, set_from_mask(m, mask))) continue;
      for (int extra = 0; extra < m; ++extra)
        CHECK(is_fas(d, set_from_mask(m, mask | (std::uint64_t{1} << extra))));
    }
  }
}

TEST_CASE("mask checker agrees with the set predicate") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Digraph d = random_digraph(4, 0.6, seed);
    const int m = d.arc_count();
    const detail::MaskChecker checker(d);
    const std::uint64_t full = m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));
    for (std::uint64_t del = 0; del <= full; ++del) {
      CHECK(checker.acyclic_kept(full & ~del) == is_fas(d, set_from_mask(m, del)));
      if (full == 0) break;
    }
  }
}

TEST_CASE("induced acyclicity agrees with the vertex predicate") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Digraph d = random_digraph(5, 0.6, seed);
    const int n = d.vertex_count();
    std::vector<std::uint32_t> out_nbr(n, 0);
    for (const Arc& a : d.arcs()) out_nbr[a.from] |= 1u << a.to;
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t del = 0; del <= all; ++del) {
      VertexSet dv(n);
      for (int v = 0; v < n; ++v)
        if ((del >> v) & 1) dv.set(v);
      CHECK(detail::acyclic_induced(out_nbr, all & ~del) == is_fvs(d, dv));
    }
  }
}

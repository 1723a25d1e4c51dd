#pragma once
// Exact spectrum counters. Brute-force subset enumeration is the ground
// truth everything else is validated against; the subset dynamic program is
// an independent implementation used both as a cross-check and as the
// larger-instance backend.

#include <gmpxx.h>

#include "fascount/graphs.hpp"
#include "fascount/spectrum.hpp"

namespace fascount {

// Enumeration ceilings. Configuration, not constants: every counter takes a
// Caps and refuses oversized instances with CapExceeded naming the cap.
struct Caps {
  int brute_force_arcs = 24;       // 2^m arc-subset sweeps
  int dp_vertices = 16;            // 3^n subset dynamic program
  int subset_vertices = 24;        // 2^n vertex-subset sweeps (VC, FVS)
  int reduced_core_vertices = 16;  // weighted dynamic program after reductions
};

// Hard ceiling for brute_force_arcs; beyond 2^30 subsets the sweep is not a
// practical oracle on anything.
inline constexpr int kBruteForceArcCeiling = 30;

// Feedback arc set spectrum by enumerating all 2^m arc subsets against
// is_fas. Requires m <= caps.brute_force_arcs <= 30.
CountSpectrum fas_spectrum_bruteforce(const Digraph& d, const Caps& caps = {});

// Total number of feedback arc sets (the spectrum sum, one sweep).
mpz_class fas_count_bruteforce(const Digraph& d, const Caps& caps = {});

// Number of feedback arc sets of size exactly k, by enumerating the C(m, k)
// arc subsets of that size. `budget` caps C(m, k) itself, so this reaches
// wider graphs than the full sweep when k is small.
mpz_class card_fas_bruteforce(const Digraph& d, int k, const Caps& caps = {},
                              unsigned long long budget = 80'000'000ull);

// Feedback arc set spectrum via dynamic programming over vertex subsets.
// For every S the polynomial A(S; x) accumulates deletion patterns on the
// arcs inside S that leave S acyclic, weighted x^(arcs deleted), through
// inclusion-exclusion over the candidate source set T of the kept subgraph:
//
//   A({}; x) = 1
//   A(S; x)  = sum over nonempty T subset of S of
//                (-1)^(|T|+1) * x^a(S,T) * (1+x)^a(T,S\T) * A(S\T; x)
//
// where a(X,Y) counts arcs from X to Y. Source vertices of the kept
// subgraph keep no incoming arcs (every arc into T is deleted: factor x
// each); arcs leaving T are unconstrained (factor 1+x each); arcs inside
// S\T recurse. Inclusion-exclusion cancels the overcount from subgraphs
// whose true source set is a proper superset of T. Requires
// n <= caps.dp_vertices.
CountSpectrum fas_spectrum_dp(const Digraph& d, const Caps& caps = {});

// Vertex cover spectrum over all 2^n vertex subsets. Requires
// n <= caps.subset_vertices.
CountSpectrum vc_spectrum(const UGraph& g, const Caps& caps = {});

// Feedback vertex set spectrum over all 2^n vertex subsets. Requires
// n <= caps.subset_vertices.
CountSpectrum fvs_spectrum(const Digraph& d, const Caps& caps = {});

// Number of inclusion-minimal feedback arc sets. Uses the single-deletion
// criterion: F is minimal iff no F \ {a} is a feedback arc set. That
// suffices because supersets of feedback arc sets are feedback arc sets, so
// if any proper subset F' of F works then F minus one arc of F \ F'
// contains F' and works too. Requires m <= caps.brute_force_arcs.
mpz_class minimal_fas_count(const Digraph& d, const Caps& caps = {});

}  // namespace fascount

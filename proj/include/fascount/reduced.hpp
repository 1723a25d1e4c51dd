#pragma once
// Exact feedback arc set counting on instances too large for the plain
// sweeps, via exactness-preserving reductions.
//
// Arcs are generalized to bundles: a directed connection carrying two
// polynomial weights in x (x tracks deleted arcs). `open` generates the
// deletion patterns of the underlying arcs that leave a path through the
// bundle; `cut` generates the patterns that block it. A plain arc lifts to
// open = 1, cut = x. Four reductions preserve the spectrum exactly:
//
//   prune:    a vertex with no in-bundles (or no out-bundles) lies on no
//             cycle; each incident bundle is unconstrained and contributes
//             a global factor (open + cut).
//   series:   a vertex with exactly one in-bundle and one out-bundle is
//             dissolved; the pair fuses to open = o1*o2,
//             cut = c1*c2 + c1*o2 + o1*c2.
//   parallel: two bundles with the same endpoints fuse to cut = c1*c2,
//             open = o1*o2 + o1*c2 + c1*o2.
//   loop:     a bundle from a vertex to itself must be blocked; its cut is
//             a global forced factor.
//
// What survives is a small core on which the same inclusion-exclusion
// subset dynamic program as fas_spectrum_dp runs with bundle weights in
// place of single arcs. Every cut polynomial has zero constant term (a
// block needs at least one deletion), so truncating all arithmetic at a
// degree bound keeps low-order coefficients exact while the bound prunes
// the recursion.

#include <gmpxx.h>

#include "fascount/counters.hpp"
#include "fascount/graphs.hpp"
#include "fascount/spectrum.hpp"

namespace fascount {

// Spectrum coefficients 0..min(max_degree, arc count), exact; higher
// cardinalities are not computed. Requires the reduced core to fit
// caps.reduced_core_vertices.
CountSpectrum fas_spectrum_reduced(const Digraph& d, int max_degree, const Caps& caps = {});

// Total number of feedback arc sets (untruncated run, summed).
mpz_class fas_count_reduced(const Digraph& d, const Caps& caps = {});

// Minimum feedback arc set size and multiplicity, by escalating the
// truncation depth until a nonzero coefficient appears.
MinimumCount minimum_fas_reduced(const Digraph& d, const Caps& caps = {});

}  // namespace fascount

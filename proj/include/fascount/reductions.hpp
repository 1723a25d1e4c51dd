#pragma once
// Counting reductions driven by injected counting oracles, and the identity
// verifiers behind the verification campaigns. Oracles are plain callables
// so tests can substitute deliberately corrupted ones and confirm the
// consistency assertions fire.

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "fascount/counters.hpp"
#include "fascount/graphs.hpp"
#include "fascount/spectrum.hpp"

namespace fascount {

// Answers: number of feedback arc sets of size exactly k.
using CardFasFn = std::function<mpz_class(const Digraph&, int k)>;
// Answers: total number of feedback arc sets.
using FasTotalFn = std::function<mpz_class(const Digraph&)>;

struct OracleCall {
  int vertices = 0;
  int arcs = 0;
  int k = -1;  // -1 for total queries
  mpz_class answer;
};

struct OracleTranscript {
  std::vector<OracleCall> calls;
  int size() const { return static_cast<int>(calls.size()); }
};

// Exact backends. Dispatch per queried digraph: full brute-force sweep when
// the arc count fits the brute cap, the subset dynamic program when the
// vertex count fits the dp cap, otherwise the reduction engine truncated at
// max_k. Spectra are memoized per serialized digraph, so repeated queries
// against the same instance cost one computation.
CardFasFn make_card_fas_oracle(const Caps& caps = {}, int max_k = -1);
FasTotalFn make_fas_total_oracle(const Caps& caps = {});

struct CardVcResult {
  mpz_class count;
  OracleTranscript transcript;
};

// Number of vertex covers of g of size exactly k, asking the oracle k+1
// questions F(0..k) about one instance: the karp_gadget(g, k+1). With
// ell = k+1, every feedback arc set of the gadget with at most k arcs picks
// some j vertex arcs forming a vertex cover plus arbitrary replica arcs, so
//
//   F(k') = sum_{j<=k'} C(j) * binomial(4*ell*|E|, k'-j)
//
// which inverts to C(k') = F(k') - sum_{j<k'} binomial(4*ell*|E|, k'-j)*C(j),
// solved ascending. A negative intermediate C(k') raises ConsistencyError.
CardVcResult card_vc_via_card_fas(const UGraph& g, int k, const CardFasFn& oracle);

struct SpectrumResult {
  CountSpectrum spectrum;
  OracleTranscript transcript;
};

// Full feedback arc set spectrum of d from |A|+1 total-count queries on
// subdivision gadgets. Deletion patterns on a subdivided arc block it in
// 2^ell - 1 ways, so the gadget total is the spectrum polynomial evaluated
// at 2^ell - 1; querying ell = 1..|A|+1 and interpolating exactly over the
// rationals recovers the coefficients. Fractional or negative coefficients
// raise ConsistencyError.
SpectrumResult fas_spectrum_via_fas(const Digraph& d, const FasTotalFn& oracle);

struct MinimumResult {
  MinimumCount minimum;
  OracleTranscript transcript;
};

// Minimum feedback arc set size and multiplicity by querying k = 0,1,2,...
// until the answer is positive: exactly minimum+1 oracle calls.
MinimumResult minimum_fas_via_card_fas(const Digraph& d, const CardFasFn& oracle);

struct ReductionCheck {
  std::string name;
  std::string left;
  std::string right;
  bool pass = true;
};

struct ReductionReport {
  std::string name;
  std::string instance;  // serialized source graph (+ parameters)
  std::vector<ReductionCheck> checks;
  bool passed() const;
  std::string to_text() const;
};

// Checks the fiber structure of subdivision: every feedback arc set of
// subdivision_gadget(d, ell) projects (arc -> its path) onto a feedback arc
// set of d, each feedback arc set F of d owns exactly (2^ell - 1)^|F|
// preimages, non-solutions own none, and the totals aggregate accordingly.
// Enumerates all 2^(ell*|A|) subsets; requires ell*|A| within the brute cap.
ReductionReport verify_partition_identity(const Digraph& d, int ell, const Caps& caps = {});

// Checks karp_gadget(g, 2) preserves the optimum parsimoniously: equal
// minimum sizes, equal minimum multiplicities, and minimum-size witnesses
// correspond (every minimum vertex subset W covers g iff its vertex-arc
// lift is a feedback arc set of the gadget; when the combination budget
// allows, additionally every minimum-size feedback arc set of the gadget
// consists of vertex arcs only).
ReductionReport verify_parsimonious_min(const UGraph& g, const Caps& caps = {});

// Checks feedback arc sets of d against feedback vertex sets of
// line_digraph(d): spectra agree and the subset bijection (arc set ->
// same-indexed vertex set) is exact over all 2^|A| subsets.
ReductionReport verify_fvs_correspondence(const Digraph& d, const Caps& caps = {});

}  // namespace fascount

#include <doctest.h>

#include <vector>

#include "fascount/counters.hpp"
#include "fascount/errors.hpp"
#include "fascount/gadgets.hpp"
#include "fascount/graphs.hpp"
#include "fascount/reductions.hpp"

using namespace fascount;

namespace {

Digraph cycle(int n) {
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) arcs.push_back(Arc{v, (v + 1) % n});
  return Digraph(n, std::move(arcs));
}

UGraph p3() { return UGraph(3, {Edge{0, 1}, Edge{1, 2}}); }

std::vector<mpz_class> z(std::vector<long> v) { return std::vector<mpz_class>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("vertex cover counting through the arc oracle") {
  CardFasFn oracle = make_card_fas_oracle(Caps{}, 3);  // queries stay at or below k = 3

  CardVcResult res = card_vc_via_card_fas(p3(), 2, oracle);
  CHECK(res.count == 3);
  CHECK(res.transcript.size() == 3);
  // all queries hit the one gadget built for k = 2 (ell = 3)
  for (const OracleCall& call : res.transcript.calls) {
    CHECK(call.vertices == 18);
    CHECK(call.arcs == 27);
  }
  CHECK(res.transcript.calls[0].k == 0);
  CHECK(res.transcript.calls[0].answer == 0);
  CHECK(res.transcript.calls[1].answer == 1);
  CHECK(res.transcript.calls[2].answer == 27);

  CHECK(card_vc_via_card_fas(p3(), 0, oracle).count == 0);
  CHECK(card_vc_via_card_fas(p3(), 1, oracle).count == 1);
  CHECK(card_vc_via_card_fas(p3(), 3, oracle).count == 1);

  UGraph tri(3, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}});
  CHECK(card_vc_via_card_fas(tri, 1, oracle).count == 0);
  CHECK(card_vc_via_card_fas(tri, 2, oracle).count == 3);

  CHECK_THROWS_AS(card_vc_via_card_fas(p3(), -1, oracle), std::invalid_argument);
  CHECK_THROWS_AS(card_vc_via_card_fas(p3(), 4, oracle), std::invalid_argument);
}

TEST_CASE("vertex cover driver matches the direct spectrum on seeded graphs") {
  CardFasFn oracle = make_card_fas_oracle(Caps{}, 4);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    UGraph g = random_ugraph(4, 0.6, seed);
    CountSpectrum vc = vc_spectrum(g);
    for (int k = 0; k <= g.vertex_count(); ++k)
      CHECK(card_vc_via_card_fas(g, k, oracle).count == vc[k]);
  }
}

TEST_CASE("inconsistent cardinality oracle is detected") {
  CardFasFn lying = [](const Digraph&, int k) -> mpz_class { return k == 1 ? 2 : 0; };
  CHECK_THROWS_AS(card_vc_via_card_fas(p3(), 2, lying), ConsistencyError);
}

TEST_CASE("spectrum recovery through the total oracle") {
  FasTotalFn oracle = make_fas_total_oracle();

  SpectrumResult res = fas_spectrum_via_fas(cycle(2), oracle);
  CHECK(res.spectrum.coefficients() == z({0, 2, 1}));
  CHECK(res.transcript.size() == 3);
  CHECK(res.transcript.calls[0].answer == 3);    // the 2-cycle itself
  CHECK(res.transcript.calls[1].answer == 15);   // subdivided once: evaluation at 3
  CHECK(res.transcript.calls[2].answer == 63);   // evaluation at 7
  for (const OracleCall& call : res.transcript.calls) CHECK(call.k == -1);

  CHECK(fas_spectrum_via_fas(Digraph(2, {Arc{0, 1}}), oracle).spectrum.coefficients() == z({1, 1}));
  CHECK(fas_spectrum_via_fas(Digraph(0, {}), oracle).spectrum.coefficients() == z({1}));
  CHECK(fas_spectrum_via_fas(cycle(3), oracle).spectrum.coefficients() == z({0, 3, 3, 1}));
}

TEST_CASE("spectrum recovery matches brute force on seeded instances") {
  FasTotalFn oracle = make_fas_total_oracle();
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Digraph d = random_digraph(3, 0.7, seed);
    CHECK(fas_spectrum_via_fas(d, oracle).spectrum == fas_spectrum_bruteforce(d));
  }
}

TEST_CASE("corrupted total oracle is detected") {
  FasTotalFn base = make_fas_total_oracle();
  int calls = 0;
  FasTotalFn corrupt = [&](const Digraph& d) {
    mpz_class answer = base(d);
    if (calls++ == 1) answer += 1;
    return answer;
  };
  CHECK_THROWS_AS(fas_spectrum_via_fas(cycle(2), corrupt), ConsistencyError);
}

TEST_CASE("minimum search stops at the first positive answer") {
  CardFasFn oracle = make_card_fas_oracle();

  MinimumResult res = minimum_fas_via_card_fas(cycle(3), oracle);
  CHECK(res.minimum == MinimumCount{1, 3});
  CHECK(res.transcript.size() == 2);

  MinimumResult dag = minimum_fas_via_card_fas(Digraph(3, {Arc{0, 1}, Arc{1, 2}}), oracle);
  CHECK(dag.minimum == MinimumCount{0, 1});
  CHECK(dag.transcript.size() == 1);

  CardFasFn zero = [](const Digraph&, int) -> mpz_class { return 0; };
  CHECK_THROWS_AS(minimum_fas_via_card_fas(cycle(3), zero), ConsistencyError);
}

TEST_CASE("oracle transcripts record instance shapes") {
  CardFasFn oracle = make_card_fas_oracle();
  MinimumResult res = minimum_fas_via_card_fas(cycle(3), oracle);
  for (const OracleCall& call : res.transcript.calls) {
    CHECK(call.vertices == 3);
    CHECK(call.arcs == 3);
  }
  CHECK(res.transcript.calls[0].k == 0);
  CHECK(res.transcript.calls[1].k == 1);
}

TEST_CASE("card oracle truncation depth is enforced") {
  // past the full-sweep dispatch threshold the truncated engine serves the
  // query; asking beyond the depth must refuse rather than answer wrong
  auto [gadget, map] = karp_gadget(UGraph(2, {Edge{0, 1}}), 6);  // 16 vertices, 26 arcs
  CardFasFn oracle = make_card_fas_oracle(Caps{}, 1);
  CHECK(oracle(gadget, 0) == 0);
  CHECK(oracle(gadget, 1) == 2);  // either vertex arc alone breaks every cycle
  CHECK_THROWS_AS(oracle(gadget, 2), CapExceeded);
}

TEST_CASE("partition identity verifier") {
  for (int ell = 1; ell <= 3; ++ell) {
    ReductionReport r = verify_partition_identity(cycle(2), ell);
    CHECK(r.passed());
  }
  ReductionReport acyclic = verify_partition_identity(Digraph(3, {Arc{0, 1}, Arc{1, 2}}), 3);
  CHECK(acyclic.passed());
  ReductionReport bigger = verify_partition_identity(cycle(3), 2);
  CHECK(bigger.passed());
  CHECK(bigger.to_text().find("FAIL") == std::string::npos);
  CHECK_THROWS_AS(verify_partition_identity(cycle(4), 7), CapExceeded);
}

TEST_CASE("parsimonious minimum verifier") {
  CHECK(verify_parsimonious_min(p3()).passed());
  CHECK(verify_parsimonious_min(UGraph(3, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}})).passed());
  CHECK(verify_parsimonious_min(UGraph(2, {})).passed());
  CHECK(verify_parsimonious_min(UGraph(1, {})).passed());
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    CHECK(verify_parsimonious_min(random_ugraph(4, 0.5, seed)).passed());
}

TEST_CASE("feedback vertex correspondence verifier") {
  CHECK(verify_fvs_correspondence(cycle(3)).passed());
  CHECK(verify_fvs_correspondence(cycle(2)).passed());
  CHECK(verify_fvs_correspondence(Digraph(3, {Arc{0, 1}, Arc{1, 2}})).passed());
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    CHECK(verify_fvs_correspondence(random_digraph(4, 0.5, seed)).passed());
}

TEST_CASE("reduction reports render check lines") {
  ReductionReport r = verify_fvs_correspondence(cycle(2));
  CHECK(r.name == "fvs-correspondence");
  CHECK(!r.instance.empty());
  CHECK(r.to_text().find("report fvs-correspondence") == 0);
  CHECK(r.to_text().find("passed") != std::string::npos);
}

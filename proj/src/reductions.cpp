#include "fascount/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>

#include "fascount/detail/mask_acyclic.hpp"
#include "fascount/errors.hpp"
#include "fascount/gadgets.hpp"
#include "fascount/interpolate.hpp"
#include "fascount/reduced.hpp"

namespace fascount {

namespace {

// The full sweep stays fast well below the configured refusal cap; above
// this the engines with structure win even when brute force would still be
// allowed.
int brute_dispatch_arcs(const Caps& caps) { return std::min(caps.brute_force_arcs, 20); }

// Memoized truncated spectra keyed by the serialized instance. Backend
// preference: small sweeps brute force, then the reduction engine (which
// collapses gadget chains to small cores), then the subset dynamic program,
// then brute force up to the refusal cap.
struct SpectrumCache {
  Caps caps;
  int max_k;
  std::map<std::string, CountSpectrum> memo;

  const CountSpectrum& spectrum_for(const Digraph& d) {
    std::string key = serialize(d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    CountSpectrum s;
    bool done = false;
    if (d.arc_count() <= brute_dispatch_arcs(caps)) {
      s = fas_spectrum_bruteforce(d, caps);
      done = true;
    }
    if (!done && max_k >= 0) {
      try {
        s = fas_spectrum_reduced(d, max_k, caps);
        done = true;
      } catch (const CapExceeded&) {
      }
    }
    if (!done && d.vertex_count() <= caps.dp_vertices) {
      s = fas_spectrum_dp(d, caps);
      done = true;
    }
    if (!done && d.arc_count() <= caps.brute_force_arcs) {
      s = fas_spectrum_bruteforce(d, caps);
      done = true;
    }
    if (!done)
      throw CapExceeded("card_fas oracle: instance exceeds every backend cap");
    return memo.emplace(std::move(key), std::move(s)).first->second;
  }
};

}  // namespace

CardFasFn make_card_fas_oracle(const Caps& caps, int max_k) {
  auto cache = std::make_shared<SpectrumCache>();
  cache->caps = caps;
  cache->max_k = max_k;
  return [cache](const Digraph& d, int k) -> mpz_class {
    if (k < 0 || k > d.arc_count()) return 0;
    const CountSpectrum& s = cache->spectrum_for(d);
    if (k > s.degree())
      throw CapExceeded("card_fas oracle: query k=" + std::to_string(k) + " beyond truncation depth " +
                        std::to_string(s.degree()));
    return s[k];
  };
}

FasTotalFn make_fas_total_oracle(const Caps& caps) {
  auto cache = std::make_shared<std::map<std::string, mpz_class>>();
  return [cache, caps](const Digraph& d) -> mpz_class {
    std::string key = serialize(d);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    mpz_class total;
    if (d.arc_count() <= brute_dispatch_arcs(caps)) {
      total = fas_count_bruteforce(d, caps);
    } else {
      try {
        total = fas_count_reduced(d, caps);
      } catch (const CapExceeded&) {
        if (d.vertex_count() <= caps.dp_vertices)
          total = fas_spectrum_dp(d, caps).total();
        else
          total = fas_count_bruteforce(d, caps);  // refuses past the cap
      }
    }
    return cache->emplace(std::move(key), std::move(total)).first->second;
  };
}

CardVcResult card_vc_via_card_fas(const UGraph& g, int k, const CardFasFn& oracle) {
  if (k < 0 || k > g.vertex_count())
    throw std::invalid_argument("card_vc_via_card_fas requires 0 <= k <= vertex count");
  const int ell = k + 1;
  auto [gadget, map] = karp_gadget(g, ell);
  const unsigned long replica_arcs = 4ul * ell * g.edge_count();

  CardVcResult result;
  std::vector<mpz_class> corrected(k + 1);
  for (int kp = 0; kp <= k; ++kp) {  // ascending: F(0), F(1), ..., F(k)
    mpz_class f = oracle(gadget, kp);
    result.transcript.calls.push_back({gadget.vertex_count(), gadget.arc_count(), kp, f});
    mpz_class c = f;
    for (int j = 0; j < kp; ++j) c -= binomial(replica_arcs, kp - j) * corrected[j];
    if (c < 0)
      throw ConsistencyError("card_vc_via_card_fas: corrected count at k'=" + std::to_string(kp) +
                             " is negative (" + c.get_str() + "); the oracle is inconsistent");
    corrected[kp] = std::move(c);
  }
  result.count = corrected[k];
  return result;
}

SpectrumResult fas_spectrum_via_fas(const Digraph& d, const FasTotalFn& oracle) {
  const int m = d.arc_count();
  SpectrumResult result;
  std::vector<mpz_class> nodes, values;
  for (int ell = 1; ell <= m + 1; ++ell) {
    auto [gadget, map] = subdivision_gadget(d, ell);
    mpz_class total = oracle(gadget);
    result.transcript.calls.push_back({gadget.vertex_count(), gadget.arc_count(), -1, total});
    mpz_class node = (mpz_class(1) << ell) - 1;  // deletion patterns blocking one subdivided arc
    nodes.push_back(std::move(node));
    values.push_back(std::move(total));
  }
  std::vector<mpq_class> coeff = interpolate_rational(nodes, values);
  std::vector<mpz_class> ints(m + 1);
  for (int i = 0; i <= m; ++i) {
    if (coeff[i].get_den() != 1)
      throw ConsistencyError("fas_spectrum_via_fas: coefficient " + std::to_string(i) + " is fractional (" +
                             coeff[i].get_str() + "); the oracle is inconsistent");
    if (coeff[i] < 0)
      throw ConsistencyError("fas_spectrum_via_fas: coefficient " + std::to_string(i) + " is negative (" +
                             coeff[i].get_str() + "); the oracle is inconsistent");
    ints[i] = coeff[i].get_num();
  }
  result.spectrum = CountSpectrum::from_coefficients(std::move(ints));
  return result;
}

MinimumResult minimum_fas_via_card_fas(const Digraph& d, const CardFasFn& oracle) {
  MinimumResult result;
  for (int k = 0; k <= d.arc_count(); ++k) {
    mpz_class f = oracle(d, k);
    result.transcript.calls.push_back({d.vertex_count(), d.arc_count(), k, f});
    if (f > 0) {
      result.minimum = MinimumCount{k, std::move(f)};
      return result;
    }
  }
  throw ConsistencyError("minimum_fas_via_card_fas: oracle reported no feedback arc set of any size");
}

bool ReductionReport::passed() const {
  for (const ReductionCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ReductionReport::to_text() const {
  std::string out = "report " + name + "\n";
  for (const ReductionCheck& c : checks)
    out += std::string(c.pass ? "check " : "FAIL ") + c.name + " left=" + c.left + " right=" + c.right + "\n";
  out += passed() ? "passed\n" : "failed\n";
  return out;
}

namespace {

void add_check(ReductionReport& report, const std::string& name, const std::string& left,
               const std::string& right) {
  report.checks.push_back({name, left, right, left == right});
}

}  // namespace

ReductionReport verify_partition_identity(const Digraph& d, int ell, const Caps& caps) {
  ReductionReport report;
  report.name = "partition-identity";
  report.instance = serialize(d) + "ell " + std::to_string(ell) + "\n";

  auto [gadget, map] = subdivision_gadget(d, ell);
  const int m = d.arc_count();
  const int mg = gadget.arc_count();
  if (mg > caps.brute_force_arcs)
    throw CapExceeded("verify_partition_identity: gadget has " + std::to_string(mg) +
                      " arcs, exceeds brute_force_arcs cap " + std::to_string(caps.brute_force_arcs));

  add_check(report, "gadget-vertices", std::to_string(gadget.vertex_count()),
            std::to_string(d.vertex_count() + (ell - 1) * m));
  add_check(report, "gadget-arcs", std::to_string(mg), std::to_string(ell * m));

  // arc a of d -> mask of its path's arc indices in the gadget
  std::vector<std::uint64_t> path_mask(m, 0);
  for (int a = 0; a < m; ++a)
    for (size_t t = 0; t + 1 < map.path[a].size(); ++t) {
      auto idx = gadget.arc_index(Arc{map.path[a][t], map.path[a][t + 1]});
      if (!idx) throw ConsistencyError("verify_partition_identity: path arc missing from gadget");
      path_mask[a] |= std::uint64_t{1} << *idx;
    }

  // Sweep the gadget's arc subsets, tally each solution under its projection.
  const detail::MaskChecker checker(gadget);
  const std::uint64_t full = mg == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << mg) - 1;
  std::vector<unsigned long long> fiber(std::uint64_t{1} << m, 0);
  for (std::uint64_t del = 0;; ++del) {
    if (checker.acyclic_kept(full & ~del)) {
      std::uint64_t proj = 0;
      for (int a = 0; a < m; ++a)
        if (del & path_mask[a]) proj |= std::uint64_t{1} << a;
      ++fiber[proj];
    }
    if (del == full) break;
  }

  // Every projection class must match its predicted fiber size exactly.
  const mpz_class weight = (mpz_class(1) << ell) - 1;
  const detail::MaskChecker source_checker(d);
  const std::uint64_t full_src = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  mpz_class gadget_total = 0;
  int bad_fibers = 0;
  std::string first_bad;
  for (std::uint64_t proj = 0;; ++proj) {
    mpz_class expected = 0;
    if (source_checker.acyclic_kept(full_src & ~proj)) {
      mpz_pow_ui(expected.get_mpz_t(), weight.get_mpz_t(), std::popcount(proj));
    }
    if (expected != static_cast<unsigned long>(fiber[proj])) {
      ++bad_fibers;
      if (first_bad.empty())
        first_bad = "projection mask " + std::to_string(proj) + ": fiber " + std::to_string(fiber[proj]) +
                    ", expected " + expected.get_str();
    }
    gadget_total += static_cast<unsigned long>(fiber[proj]);
    if (proj == full_src) break;
  }
  report.checks.push_back({"fibers", bad_fibers == 0 ? "all-exact" : first_bad,
                           "all-exact", bad_fibers == 0});

  // Aggregate identity: gadget total = spectrum of d evaluated at 2^ell - 1.
  CountSpectrum spectrum = fas_spectrum_bruteforce(d, caps);
  mpz_class aggregated = 0;
  for (int i = 0; i <= spectrum.degree(); ++i) {
    mpz_class w;
    mpz_pow_ui(w.get_mpz_t(), weight.get_mpz_t(), i);
    aggregated += spectrum[i] * w;
  }
  add_check(report, "aggregate-total", gadget_total.get_str(), aggregated.get_str());

  // The reduction engine must reproduce the same total on the raw gadget.
  add_check(report, "reduced-engine-total", fas_count_reduced(gadget, caps).get_str(), gadget_total.get_str());

  return report;
}

ReductionReport verify_parsimonious_min(const UGraph& g, const Caps& caps) {
  ReductionReport report;
  report.name = "parsimonious-minimum";
  report.instance = serialize(g);

  auto [gadget, map] = karp_gadget(g, 2);

  CountSpectrum vc = vc_spectrum(g, caps);
  MinimumCount vc_min = minimum_of_spectrum(vc);
  MinimumCount fas_min = gadget.arc_count() <= caps.brute_force_arcs
                             ? minimum_of_spectrum(fas_spectrum_bruteforce(gadget, caps))
                             : minimum_fas_reduced(gadget, caps);

  add_check(report, "minimum-size", std::to_string(vc_min.cardinality), std::to_string(fas_min.cardinality));
  add_check(report, "minimum-count", vc_min.count.get_str(), fas_min.count.get_str());

  // Minimum-size witnesses correspond one-to-one through the vertex-arc lift.
  const int n = g.vertex_count();
  int lifted_solutions = 0;
  int lift_mismatches = 0;
  std::vector<int> members;
  const std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
  for (std::uint32_t W = 0;; ++W) {
    if (std::popcount(W) == vc_min.cardinality) {
      members.clear();
      VertexSet cover(n);
      for (int v = 0; v < n; ++v)
        if ((W >> v) & 1) {
          cover.set(v);
          members.push_back(v);
        }
      std::vector<Arc> lift;
      for (int v : members) lift.push_back(map.vertex_arc[v]);
      const bool covers = is_vc(g, cover);
      const bool feedback = is_fas(gadget, arc_set(gadget, lift));
      if (covers != feedback) ++lift_mismatches;
      if (feedback) ++lifted_solutions;
    }
    if (W == all) break;
  }
  report.checks.push_back({"lift-agreement", lift_mismatches == 0 ? "exact" : std::to_string(lift_mismatches) + " mismatches",
                           "exact", lift_mismatches == 0});
  add_check(report, "lifted-minimum-count", std::to_string(lifted_solutions), vc_min.count.get_str());

  // When the combination budget allows (and the gadget fits in an arc
  // mask), enumerate every minimum-size feedback arc set of the gadget and
  // confirm it uses vertex arcs only.
  mpz_class combos = binomial(gadget.arc_count(), fas_min.cardinality);
  if (gadget.arc_count() <= 64 && combos <= 2'000'000) {
    const int mg = gadget.arc_count();
    std::uint64_t vertex_arc_mask = 0;
    for (int v = 0; v < n; ++v) {
      auto idx = gadget.arc_index(map.vertex_arc[v]);
      if (!idx) throw ConsistencyError("verify_parsimonious_min: vertex arc missing from gadget");
      vertex_arc_mask |= std::uint64_t{1} << *idx;
    }
    const detail::MaskChecker checker(gadget);
    const std::uint64_t full = mg == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << mg) - 1;
    const int k = fas_min.cardinality;
    unsigned long long solutions = 0, off_lift = 0;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (k > 0) {
      std::uint64_t del = 0;
      for (int i : pick) del |= std::uint64_t{1} << i;
      if (checker.acyclic_kept(full & ~del)) {
        ++solutions;
        if (del & ~vertex_arc_mask) ++off_lift;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == mg - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (k == 0) solutions = checker.acyclic_kept(full) ? 1 : 0;
    add_check(report, "enumerated-minimum-count", std::to_string(solutions), vc_min.count.get_str());
    add_check(report, "minimums-on-vertex-arcs", std::to_string(off_lift), "0");
  }

  return report;
}

ReductionReport verify_fvs_correspondence(const Digraph& d, const Caps& caps) {
  ReductionReport report;
  report.name = "fvs-correspondence";
  report.instance = serialize(d);

  auto [line, map] = line_digraph(d);
  const int m = d.arc_count();
  if (m > caps.brute_force_arcs)
    throw CapExceeded("verify_fvs_correspondence: " + std::to_string(m) +
                      " arcs exceeds brute_force_arcs cap " + std::to_string(caps.brute_force_arcs));

  CountSpectrum fas = fas_spectrum_bruteforce(d, caps);
  Caps line_caps = caps;
  line_caps.subset_vertices = std::max(line_caps.subset_vertices, m);
  CountSpectrum fvs = fvs_spectrum(line, line_caps);
  add_check(report, "spectrum-degree", std::to_string(fas.degree()), std::to_string(fvs.degree()));
  int coeff_mismatches = 0;
  std::string first_bad;
  for (int k = 0; k <= std::min(fas.degree(), fvs.degree()); ++k)
    if (fas[k] != fvs[k]) {
      ++coeff_mismatches;
      if (first_bad.empty())
        first_bad = "k=" + std::to_string(k) + ": " + fas[k].get_str() + " vs " + fvs[k].get_str();
    }
  report.checks.push_back({"spectra", coeff_mismatches == 0 ? "equal" : first_bad, "equal", coeff_mismatches == 0});

  // Subset bijection: deleting arc set S from d and deleting the
  // same-indexed vertex set from the line digraph agree on every S.
  const detail::MaskChecker d_checker(d);
  std::vector<std::uint32_t> out_nbr(m, 0);
  for (const Arc& a : line.arcs()) out_nbr[a.from] |= 1u << a.to;
  const std::uint64_t full_d = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  const std::uint32_t all_line = m >= 32 ? ~0u : ((1u << m) - 1);
  unsigned long long bijection_mismatches = 0;
  for (std::uint64_t S = 0;; ++S) {
    const bool fas_side = d_checker.acyclic_kept(full_d & ~S);
    const bool fvs_side = detail::acyclic_induced(out_nbr, all_line & ~static_cast<std::uint32_t>(S));
    if (fas_side != fvs_side) ++bijection_mismatches;
    if (S == full_d) break;
  }
  add_check(report, "subset-bijection-mismatches", std::to_string(bijection_mismatches), "0");

  return report;
}

}  // namespace fascount

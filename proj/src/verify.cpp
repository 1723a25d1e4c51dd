#include "fascount/verify.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fascount/errors.hpp"
#include "fascount/graphs.hpp"
#include "fascount/reductions.hpp"

namespace fascount {

namespace {

constexpr double kDensityGrid[3] = {0.3, 0.5, 0.8};

double pick_p(SplitMix64& rng, const VerifyConfig& cfg) {
  const std::uint64_t draw = rng.next();  // consumed even when the grid is pinned, keeps streams aligned
  if (cfg.fixed_p >= 0) return cfg.fixed_p;
  return kDensityGrid[draw % 3];
}

int pick_in(SplitMix64& rng, int lo, int hi) { return lo + static_cast<int>(rng.next() % (hi - lo + 1)); }

std::string describe(const std::string& graph_text, const std::string& params) {
  return graph_text + (params.empty() ? "" : "params " + params + "\n");
}

void record(CampaignReport& report, const std::string& section, int trial, const std::string& instance,
            const std::string& detail, bool pass) {
  ++report.executed;
  if (pass)
    ++report.passed;
  else
    report.failures.push_back({section, trial, instance, detail});
}

// One redraw loop shared by the corpora: shapes that violate the acceptance
// predicate are discarded and redrawn (deterministically, same stream).
template <class Graph, class Draw, class Accept>
Graph draw_until(SplitMix64& rng, const Draw& draw, const Accept& accept) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph g = draw(rng);
    if (accept(g)) return g;
  }
  throw std::logic_error("instance corpus rejected 100000 consecutive draws");
}

std::string spectra_diff(const CountSpectrum& a, const CountSpectrum& b) {
  if (a.degree() != b.degree())
    return "spectrum degrees differ: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree());
  for (int k = 0; k <= a.degree(); ++k)
    if (a[k] != b[k])
      return "coefficient " + std::to_string(k) + ": " + a[k].get_str() + " vs " + b[k].get_str();
  return "";
}

CampaignReport run_dp_vs_brute(const VerifyConfig& cfg) {
  CampaignReport report{"dp-vs-brute", cfg.seed, 0, 0, {}};
  if (cfg.exhaustive_n >= 0) {
    if (cfg.exhaustive_n > 4)
      throw std::invalid_argument("dp-vs-brute exhaustive sweep supports at most 4 vertices");
    const int n = cfg.exhaustive_n;
    std::vector<Arc> candidates;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) candidates.push_back(Arc{u, v});
    const std::uint32_t cases = 1u << candidates.size();
    for (std::uint32_t mask = 0; mask < cases; ++mask) {
      std::vector<Arc> arcs;
      for (size_t i = 0; i < candidates.size(); ++i)
        if ((mask >> i) & 1) arcs.push_back(candidates[i]);
      Digraph d(n, std::move(arcs));
      std::string diff = spectra_diff(fas_spectrum_dp(d, cfg.caps), fas_spectrum_bruteforce(d, cfg.caps));
      record(report, report.suite, -1, describe(serialize(d), "exhaustive-case " + std::to_string(mask)),
             diff, diff.empty());
    }
  }
  SplitMix64 rng{cfg.seed};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 8;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::string params;
    Digraph d = draw_until<Digraph>(
        rng,
        [&](SplitMix64& r) {
          const int n = pick_in(r, 1, max_n);
          const double p = pick_p(r, cfg);
          const std::uint64_t s = r.next();
          params = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" + std::to_string(s);
          return random_digraph(n, p, s);
        },
        [&](const Digraph& g) { return g.arc_count() <= cfg.caps.brute_force_arcs; });
    std::string diff = spectra_diff(fas_spectrum_dp(d, cfg.caps), fas_spectrum_bruteforce(d, cfg.caps));
    record(report, report.suite, trial, describe(serialize(d), params), diff, diff.empty());
  }
  return report;
}

CampaignReport run_partition(const VerifyConfig& cfg) {
  CampaignReport report{"partition", cfg.seed, 0, 0, {}};
  SplitMix64 rng{cfg.seed};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 6;
  const int max_ell = cfg.max_ell > 0 ? cfg.max_ell : 4;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    int ell = 1;
    std::string params;
    Digraph d = draw_until<Digraph>(
        rng,
        [&](SplitMix64& r) {
          ell = pick_in(r, 1, max_ell);
          const int n = pick_in(r, 1, max_n);
          const double p = pick_p(r, cfg);
          const std::uint64_t s = r.next();
          params = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" + std::to_string(s) +
                   " ell=" + std::to_string(ell);
          return random_digraph(n, p, s);
        },
        [&](const Digraph& g) { return ell * g.arc_count() <= 18; });
    try {
      ReductionReport rr = verify_partition_identity(d, ell, cfg.caps);
      record(report, report.suite, trial, describe(serialize(d), params), rr.passed() ? "" : rr.to_text(),
             rr.passed());
    } catch (const std::exception& e) {
      record(report, report.suite, trial, describe(serialize(d), params), e.what(), false);
    }
  }
  return report;
}

CampaignReport run_karp_recurrence(const VerifyConfig& cfg) {
  CampaignReport report{"karp-recurrence", cfg.seed, 0, 0, {}};
  SplitMix64 rng{cfg.seed};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 5;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = pick_in(rng, 1, max_n);
    const double p = pick_p(rng, cfg);
    const std::uint64_t s = rng.next();
    const std::string params = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" + std::to_string(s);
    UGraph g = random_ugraph(n, p, s);
    std::string detail;
    try {
      CountSpectrum vc = vc_spectrum(g, cfg.caps);
      CardFasFn oracle = make_card_fas_oracle(cfg.caps, n);
      for (int k = 0; k <= n && detail.empty(); ++k) {
        CardVcResult res = card_vc_via_card_fas(g, k, oracle);
        if (res.count != vc[k])
          detail = "k=" + std::to_string(k) + ": driver " + res.count.get_str() + ", direct " + vc[k].get_str();
        else if (res.transcript.size() != k + 1)
          detail = "k=" + std::to_string(k) + ": transcript has " + std::to_string(res.transcript.size()) +
                   " calls, expected " + std::to_string(k + 1);
      }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    record(report, report.suite, trial, describe(serialize(g), params), detail, detail.empty());
  }
  return report;
}

CampaignReport run_interpolation(const VerifyConfig& cfg) {
  CampaignReport report{"interpolation", cfg.seed, 0, 0, {}};
  SplitMix64 rng{cfg.seed};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 6;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::string params;
    Digraph d = draw_until<Digraph>(
        rng,
        [&](SplitMix64& r) {
          const int n = pick_in(r, 1, max_n);
          const double p = pick_p(r, cfg);
          const std::uint64_t s = r.next();
          params = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" + std::to_string(s);
          return random_digraph(n, p, s);
        },
        [&](const Digraph& g) { return g.arc_count() <= 6; });
    std::string detail;
    try {
      FasTotalFn base = make_fas_total_oracle(cfg.caps);
      FasTotalFn oracle = base;
      if (cfg.corrupt_oracle) {
        auto counter = std::make_shared<int>(0);
        oracle = [base, counter](const Digraph& q) {
          mpz_class answer = base(q);
          if ((*counter)++ == 1) answer += 1;  // deliberate corruption of the second answer
          return answer;
        };
        params += " corrupt-oracle=second-call";
      }
      SpectrumResult res = fas_spectrum_via_fas(d, oracle);
      std::string diff = spectra_diff(res.spectrum, fas_spectrum_bruteforce(d, cfg.caps));
      if (!diff.empty())
        detail = diff;
      else if (res.transcript.size() != d.arc_count() + 1)
        detail = "transcript has " + std::to_string(res.transcript.size()) + " calls, expected " +
                 std::to_string(d.arc_count() + 1);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    record(report, report.suite, trial, describe(serialize(d), params), detail, detail.empty());
  }
  return report;
}

CampaignReport run_parsimonious(const VerifyConfig& cfg) {
  CampaignReport report{"parsimonious", cfg.seed, 0, 0, {}};
  SplitMix64 rng{cfg.seed};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 6;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = pick_in(rng, 1, max_n);
    const double p = pick_p(rng, cfg);
    const std::uint64_t s = rng.next();
    const std::string params = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" + std::to_string(s);
    UGraph g = random_ugraph(n, p, s);
    try {
      ReductionReport rr = verify_parsimonious_min(g, cfg.caps);
      record(report, report.suite, trial, describe(serialize(g), params), rr.passed() ? "" : rr.to_text(),
             rr.passed());
    } catch (const std::exception& e) {
      record(report, report.suite, trial, describe(serialize(g), params), e.what(), false);
    }
  }
  return report;
}

CampaignReport run_fvs(const VerifyConfig& cfg) {
  CampaignReport report{"fvs", cfg.seed, 0, 0, {}};
  SplitMix64 rng{cfg.seed};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 5;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::string params;
    Digraph d = draw_until<Digraph>(
        rng,
        [&](SplitMix64& r) {
          const int n = pick_in(r, 1, max_n);
          const double p = pick_p(r, cfg);
          const std::uint64_t s = r.next();
          params = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" + std::to_string(s);
          return random_digraph(n, p, s);
        },
        [&](const Digraph& g) { return g.arc_count() <= cfg.caps.brute_force_arcs; });
    try {
      ReductionReport rr = verify_fvs_correspondence(d, cfg.caps);
      record(report, report.suite, trial, describe(serialize(d), params), rr.passed() ? "" : rr.to_text(),
             rr.passed());
    } catch (const std::exception& e) {
      record(report, report.suite, trial, describe(serialize(d), params), e.what(), false);
    }
  }
  return report;
}

// Canonical sizes for the one-shot full campaign.
CampaignReport run_all(const VerifyConfig& cfg) {
  CampaignReport report{"all", cfg.seed, 0, 0, {}};
  struct Section {
    const char* suite;
    int trials;
    int exhaustive_n;
  };
  const Section sections[] = {
      {"dp-vs-brute", 200, 4}, {"partition", 100, -1},  {"karp-recurrence", 50, -1},
      {"interpolation", 50, -1}, {"parsimonious", 100, -1}, {"fvs", 100, -1},
  };
  for (const Section& s : sections) {
    VerifyConfig sub = cfg;
    sub.trials = s.trials;
    sub.exhaustive_n = s.exhaustive_n;
    sub.max_n = -1;
    sub.max_ell = -1;
    CampaignReport part = run_suite(s.suite, sub);
    report.executed += part.executed;
    report.passed += part.passed;
    for (TrialFailure& f : part.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"dp-vs-brute", "partition", "karp-recurrence", "interpolation", "parsimonious", "fvs", "all"};
}

CampaignReport run_suite(const std::string& suite, const VerifyConfig& config) {
  if (suite == "dp-vs-brute") return run_dp_vs_brute(config);
  if (suite == "partition") return run_partition(config);
  if (suite == "karp-recurrence") return run_karp_recurrence(config);
  if (suite == "interpolation") return run_interpolation(config);
  if (suite == "parsimonious") return run_parsimonious(config);
  if (suite == "fvs") return run_fvs(config);
  if (suite == "all") return run_all(config);
  throw std::invalid_argument("unknown verification suite '" + suite + "'");
}

}  // namespace fascount

#pragma once
// Seeded verification campaigns. Every suite draws its instance corpus
// deterministically from the seed (shape parameters and per-instance
// sub-seeds all come from one splitmix64 stream, and instances whose size
// exceeds the relevant enumeration cap are redrawn as part of the corpus
// definition), so identical invocations produce byte-identical reports.

#include <cstdint>
#include <string>
#include <vector>

#include "fascount/counters.hpp"

namespace fascount {

struct VerifyConfig {
  std::uint64_t seed = 0;
  int trials = 0;        // randomized trials; suites with random corpora need > 0
  int exhaustive_n = -1; // dp-vs-brute: additionally sweep all digraphs on this many vertices
  int max_n = -1;        // override the suite's default instance size ceiling
  int max_ell = -1;      // partition: override the default ell ceiling (4)
  double fixed_p = -1;   // restrict the density grid {0.3, 0.5, 0.8} to one value
  bool corrupt_oracle = false;  // interpolation: add 1 to the second oracle answer
  Caps caps;
};

struct TrialFailure {
  std::string section;  // suite name (differs from the report suite under "all")
  int trial = -1;       // -1 for exhaustive-sweep failures
  std::string instance; // serialized graph plus parameter lines, enough to replay
  std::string detail;
};

struct CampaignReport {
  std::string suite;
  std::uint64_t seed = 0;
  int executed = 0;
  int passed = 0;
  std::vector<TrialFailure> failures;
  bool ok() const { return executed > 0 && static_cast<size_t>(executed) == static_cast<size_t>(passed); }
};

// Suites: dp-vs-brute, partition, karp-recurrence, interpolation,
// parsimonious, fvs, all. Unknown names raise std::invalid_argument.
CampaignReport run_suite(const std::string& suite, const VerifyConfig& config);

std::vector<std::string> suite_names();

}  // namespace fascount

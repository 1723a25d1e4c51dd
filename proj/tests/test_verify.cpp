#include <doctest.h>

#include <string>

#include "fascount/verify.hpp"

using namespace fascount;

namespace {

VerifyConfig seeded(std::uint64_t seed, int trials) {
  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  return cfg;
}

}  // namespace

TEST_CASE("dp-vs-brute exhaustive sweep") {
  VerifyConfig cfg;
  cfg.exhaustive_n = 3;
  CampaignReport r = run_suite("dp-vs-brute", cfg);
  CHECK(r.ok());
  CHECK(r.executed == 64);  // every labeled digraph on 3 vertices
  CHECK(r.passed == 64);
  CHECK(r.failures.empty());
  CHECK_THROWS_AS(run_suite("dp-vs-brute", [] {
                    VerifyConfig c;
                    c.exhaustive_n = 5;
                    return c;
                  }()),
                  std::invalid_argument);
}

TEST_CASE("dp-vs-brute randomized trials") {
  CampaignReport r = run_suite("dp-vs-brute", seeded(11, 20));
  CHECK(r.ok());
  CHECK(r.executed == 20);
}

TEST_CASE("randomized suites pass on seeded corpora") {
  CHECK(run_suite("partition", seeded(7, 8)).ok());
  CHECK(run_suite("karp-recurrence", seeded(3, 6)).ok());
  CHECK(run_suite("interpolation", seeded(9, 8)).ok());
  CHECK(run_suite("parsimonious", seeded(1, 8)).ok());
  CHECK(run_suite("fvs", seeded(2, 8)).ok());
}

TEST_CASE("a report with zero executed trials is not ok") {
  CampaignReport r = run_suite("partition", seeded(7, 0));
  CHECK(r.executed == 0);
  CHECK(!r.ok());
}

TEST_CASE("campaigns are deterministic in the seed") {
  CampaignReport a = run_suite("interpolation", seeded(21, 6));
  CampaignReport b = run_suite("interpolation", seeded(21, 6));
  CHECK(a.executed == b.executed);
  CHECK(a.passed == b.passed);
  REQUIRE(a.failures.size() == b.failures.size());
  for (size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].instance == b.failures[i].instance);
    CHECK(a.failures[i].detail == b.failures[i].detail);
  }
}

TEST_CASE("corrupted oracle campaigns fail and report the instance") {
  VerifyConfig cfg = seeded(9, 8);
  cfg.corrupt_oracle = true;
  CampaignReport r = run_suite("interpolation", cfg);
  CHECK(!r.ok());
  CHECK(!r.failures.empty());
  for (const TrialFailure& f : r.failures) {
    CHECK(f.section == "interpolation");
    CHECK(f.instance.find("digraph") == 0);
    CHECK(f.instance.find("corrupt-oracle=second-call") != std::string::npos);
    CHECK(!f.detail.empty());
  }

  // identical corrupted runs produce identical failure records
  CampaignReport again = run_suite("interpolation", cfg);
  REQUIRE(again.failures.size() == r.failures.size());
  for (size_t i = 0; i < r.failures.size(); ++i) {
    CHECK(again.failures[i].instance == r.failures[i].instance);
    CHECK(again.failures[i].detail == r.failures[i].detail);
  }
}

TEST_CASE("density pinning keeps the corpus within the grid") {
  VerifyConfig cfg = seeded(5, 5);
  cfg.fixed_p = 0.0;  // forces empty graphs; everything is trivially consistent
  CampaignReport r = run_suite("interpolation", cfg);
  CHECK(r.ok());
}

TEST_CASE("suite name handling") {
  CHECK(suite_names().size() == 7);
  CHECK_THROWS_AS(run_suite("nope", VerifyConfig{}), std::invalid_argument);
}

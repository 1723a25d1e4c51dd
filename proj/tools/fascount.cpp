// Command line front end. Exit codes: 0 success, 2 usage error, 3 input
// error, 4 cap exceeded, 5 verification failure or internal inconsistency.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fascount/counters.hpp"
#include "fascount/errors.hpp"
#include "fascount/gadgets.hpp"
#include "fascount/graphs.hpp"
#include "fascount/reductions.hpp"
#include "fascount/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace fascount;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCap = 4;
constexpr int kExitVerify = 5;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw InputError("failed writing output file '" + path + "'");
}

void emit(const ordered_json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (!out_path.empty()) write_file(out_path, text);
  std::cout << text;
}

struct CountOptions {
  std::string kind;
  std::string algo = "brute";
  int k = -1;
  int cap = -1;
  std::string out;
  std::string input;
};

bool directed_kind(const std::string& kind) {
  return kind == "fas" || kind == "card-fas" || kind == "min-fas" || kind == "minimal-fas" || kind == "fvs" ||
         kind == "card-fvs" || kind == "min-fvs";
}

int run_count(const CountOptions& opt) {
  const bool is_card = opt.kind.rfind("card-", 0) == 0;
  const bool is_min = opt.kind.rfind("min-", 0) == 0;
  const bool fas_family = opt.kind == "fas" || opt.kind == "card-fas" || opt.kind == "min-fas";
  if (is_card && opt.k < 0) throw UsageError("--k is required for " + opt.kind);
  if (!is_card && opt.k >= 0) throw UsageError("--k only applies to card-* kinds");
  if (!fas_family && opt.algo != "brute")
    throw UsageError("--algo only applies to fas, card-fas and min-fas");

  Caps caps;
  if (opt.cap > 0) {
    if (fas_family && opt.algo == "brute")
      caps.brute_force_arcs = opt.cap;
    else if (fas_family)
      caps.dp_vertices = opt.cap;
    else if (opt.kind == "minimal-fas")
      caps.brute_force_arcs = opt.cap;
    else
      caps.subset_vertices = opt.cap;
  }

  const std::string text = read_input(opt.input);
  const auto started = std::chrono::steady_clock::now();

  ordered_json doc;
  doc["kind"] = opt.kind;
  if (directed_kind(opt.kind)) {
    Digraph d = parse_digraph(text);
    doc["input"] = {{"vertices", d.vertex_count()}, {"arcs", d.arc_count()}};
    if (fas_family) {
      doc["algorithm"] = opt.algo;
      CountSpectrum s = opt.algo == "dp" ? fas_spectrum_dp(d, caps) : fas_spectrum_bruteforce(d, caps);
      if (opt.kind == "fas") {
        doc["count"] = s.total().get_str();
      } else if (opt.kind == "card-fas") {
        doc["k"] = opt.k;
        doc["count"] = (opt.k <= s.degree() ? s[opt.k] : mpz_class(0)).get_str();
      } else {
        MinimumCount min = minimum_of_spectrum(s);
        doc["cardinality"] = min.cardinality;
        doc["count"] = min.count.get_str();
      }
    } else if (opt.kind == "minimal-fas") {
      doc["count"] = minimal_fas_count(d, caps).get_str();
    } else {
      CountSpectrum s = fvs_spectrum(d, caps);
      if (opt.kind == "fvs") {
        doc["count"] = s.total().get_str();
      } else if (opt.kind == "card-fvs") {
        doc["k"] = opt.k;
        doc["count"] = (opt.k <= s.degree() ? s[opt.k] : mpz_class(0)).get_str();
      } else {
        MinimumCount min = minimum_of_spectrum(s);
        doc["cardinality"] = min.cardinality;
        doc["count"] = min.count.get_str();
      }
    }
  } else {
    UGraph g = parse_ugraph(text);
    doc["input"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    CountSpectrum s = vc_spectrum(g, caps);
    if (opt.kind == "vc") {
      doc["count"] = s.total().get_str();
    } else if (opt.kind == "card-vc") {
      doc["k"] = opt.k;
      doc["count"] = (opt.k <= s.degree() ? s[opt.k] : mpz_class(0)).get_str();
    } else {
      MinimumCount min = minimum_of_spectrum(s);
      doc["cardinality"] = min.cardinality;
      doc["count"] = min.count.get_str();
    }
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  doc["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  emit(doc, opt.out);
  return 0;
}

struct GadgetOptions {
  std::string kind;
  int ell = 0;
  std::string out;
  std::string map_path;
  std::string input;
};

int run_gadget(const GadgetOptions& opt) {
  if (opt.kind == "line") {
    if (opt.ell != 0) throw UsageError("--ell does not apply to the line gadget");
  } else if (opt.ell < 1) {
    throw UsageError("--ell (>= 1) is required for " + opt.kind);
  }

  const std::string text = read_input(opt.input);
  Digraph gadget;
  GadgetMap map;
  if (opt.kind == "karp") {
    UGraph g = parse_ugraph(text);
    std::tie(gadget, map) = karp_gadget(g, opt.ell);
  } else if (opt.kind == "subdivision") {
    Digraph d = parse_digraph(text);
    std::tie(gadget, map) = subdivision_gadget(d, opt.ell);
  } else {
    Digraph d = parse_digraph(text);
    std::tie(gadget, map) = line_digraph(d);
  }

  if (!opt.map_path.empty()) write_file(opt.map_path, map.to_text());
  if (opt.out.empty()) {
    std::cout << serialize(gadget);
  } else {
    write_file(opt.out, serialize(gadget));
    ordered_json doc;
    doc["kind"] = opt.kind;
    if (opt.kind != "line") doc["ell"] = opt.ell;
    doc["vertices"] = gadget.vertex_count();
    doc["arcs"] = gadget.arc_count();
    doc["out"] = opt.out;
    if (!opt.map_path.empty()) doc["map"] = opt.map_path;
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

struct ReduceOptions {
  std::string kind;
  int k = -1;
  int cap = -1;
  std::string out;
  std::string input;
};

ordered_json transcript_json(const OracleTranscript& t) {
  ordered_json calls = ordered_json::array();
  for (const OracleCall& c : t.calls) {
    ordered_json call;
    call["vertices"] = c.vertices;
    call["arcs"] = c.arcs;
    if (c.k >= 0) call["k"] = c.k;
    call["answer"] = c.answer.get_str();
    calls.push_back(std::move(call));
  }
  return calls;
}

int run_reduce(const ReduceOptions& opt) {
  Caps caps;
  if (opt.cap > 0) caps.reduced_core_vertices = opt.cap;
  const std::string text = read_input(opt.input);

  ordered_json doc;
  doc["kind"] = opt.kind;
  if (opt.kind == "card-vc") {
    if (opt.k < 0) throw UsageError("--k is required for card-vc");
    UGraph g = parse_ugraph(text);
    doc["input"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    doc["k"] = opt.k;
    CardVcResult res = card_vc_via_card_fas(g, opt.k, make_card_fas_oracle(caps, opt.k));
    doc["count"] = res.count.get_str();
    doc["oracle_calls"] = res.transcript.size();
    doc["transcript"] = transcript_json(res.transcript);
  } else if (opt.kind == "fas-spectrum") {
    if (opt.k >= 0) throw UsageError("--k only applies to card-vc");
    Digraph d = parse_digraph(text);
    doc["input"] = {{"vertices", d.vertex_count()}, {"arcs", d.arc_count()}};
    SpectrumResult res = fas_spectrum_via_fas(d, make_fas_total_oracle(caps));
    doc["spectrum"] = res.spectrum.to_decimal_strings();
    doc["oracle_calls"] = res.transcript.size();
    doc["transcript"] = transcript_json(res.transcript);
  } else {
    if (opt.k >= 0) throw UsageError("--k only applies to card-vc");
    Digraph d = parse_digraph(text);
    doc["input"] = {{"vertices", d.vertex_count()}, {"arcs", d.arc_count()}};
    MinimumResult res = minimum_fas_via_card_fas(d, make_card_fas_oracle(caps, d.arc_count()));
    doc["cardinality"] = res.minimum.cardinality;
    doc["count"] = res.minimum.count.get_str();
    doc["oracle_calls"] = res.transcript.size();
    doc["transcript"] = transcript_json(res.transcript);
  }
  emit(doc, opt.out);
  return 0;
}

struct VerifyOptions {
  std::string suite;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int trials = 0;
  int exhaustive_n = -1;
  int max_n = -1;
  int max_ell = -1;
  double p = -1;
  bool corrupt = false;
  std::string out;
};

int run_verify(const VerifyOptions& opt) {
  const bool randomized = opt.suite == "all" || opt.suite != "dp-vs-brute" || opt.trials > 0;
  if (randomized && !opt.seed_given && (opt.suite == "all" || opt.trials > 0))
    throw UsageError("--seed is required for randomized campaigns");
  if (opt.suite != "all" && opt.suite != "dp-vs-brute" && opt.trials <= 0)
    throw UsageError("--trials (>= 1) is required for suite '" + opt.suite + "'");
  if (opt.suite == "dp-vs-brute" && opt.trials <= 0 && opt.exhaustive_n < 0)
    throw UsageError("dp-vs-brute needs --trials and/or --exhaustive-n");
  if (opt.corrupt && opt.suite != "interpolation")
    throw UsageError("--corrupt-oracle only applies to the interpolation suite");

  VerifyConfig cfg;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.exhaustive_n = opt.exhaustive_n;
  cfg.max_n = opt.max_n;
  cfg.max_ell = opt.max_ell;
  cfg.fixed_p = opt.p;
  cfg.corrupt_oracle = opt.corrupt;

  CampaignReport report = run_suite(opt.suite, cfg);

  ordered_json doc;
  doc["suite"] = report.suite;
  doc["seed"] = report.seed;
  doc["trials"] = opt.trials;
  doc["executed"] = report.executed;
  doc["passed"] = report.passed;
  doc["ok"] = report.ok();
  ordered_json failures = ordered_json::array();
  for (const TrialFailure& f : report.failures) {
    ordered_json fail;
    fail["section"] = f.section;
    fail["trial"] = f.trial;
    fail["instance"] = f.instance;
    fail["detail"] = f.detail;
    failures.push_back(std::move(fail));
  }
  doc["failures"] = std::move(failures);
  emit(doc, opt.out);
  return report.ok() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting for feedback arc sets, vertex covers and feedback vertex sets"};
  app.require_subcommand(1);

  CountOptions count_opt;
  CLI::App* count = app.add_subcommand("count", "count solutions of one instance");
  count->add_option("--kind", count_opt.kind, "what to count")
      ->required()
      ->check(CLI::IsMember({"fas", "card-fas", "min-fas", "minimal-fas", "vc", "card-vc", "min-vc", "fvs",
                             "card-fvs", "min-fvs"}));
  count->add_option("--algo", count_opt.algo, "counting algorithm")->check(CLI::IsMember({"brute", "dp"}));
  count->add_option("--k", count_opt.k, "cardinality for card-* kinds");
  count->add_option("--cap", count_opt.cap, "override the operative enumeration cap");
  count->add_option("--out", count_opt.out, "also write the result document to this file");
  count->add_option("input", count_opt.input, "graph file, or - for stdin")->required();

  GadgetOptions gadget_opt;
  CLI::App* gadget = app.add_subcommand("gadget", "construct a gadget instance");
  gadget->add_option("--kind", gadget_opt.kind, "gadget construction")
      ->required()
      ->check(CLI::IsMember({"karp", "subdivision", "line"}));
  gadget->add_option("--ell", gadget_opt.ell, "replication / path-length parameter");
  gadget->add_option("--out", gadget_opt.out, "write the gadget graph here (stdout otherwise)");
  gadget->add_option("--map", gadget_opt.map_path, "write the correspondence sidecar here");
  gadget->add_option("input", gadget_opt.input, "graph file, or - for stdin")->required();

  ReduceOptions reduce_opt;
  CLI::App* reduce = app.add_subcommand("reduce", "count through an oracle-driven reduction");
  reduce->add_option("--kind", reduce_opt.kind, "reduction driver")
      ->required()
      ->check(CLI::IsMember({"card-vc", "fas-spectrum", "min-fas"}));
  reduce->add_option("--k", reduce_opt.k, "cardinality (card-vc)");
  reduce->add_option("--cap", reduce_opt.cap, "override the reduced-core vertex cap");
  reduce->add_option("--out", reduce_opt.out, "also write the result document to this file");
  reduce->add_option("input", reduce_opt.input, "graph file, or - for stdin")->required();

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run a seeded verification campaign");
  verify->add_option("--suite", verify_opt.suite, "campaign suite")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  CLI::Option* seed_opt = verify->add_option("--seed", verify_opt.seed, "campaign seed");
  verify->add_option("--trials", verify_opt.trials, "number of randomized trials");
  verify->add_option("--exhaustive-n", verify_opt.exhaustive_n, "dp-vs-brute: sweep all digraphs on n vertices");
  verify->add_option("--n", verify_opt.max_n, "override the suite's instance size ceiling");
  verify->add_option("--ell", verify_opt.max_ell, "partition: override the ell ceiling");
  verify->add_option("--p", verify_opt.p, "pin the density grid to one value");
  verify->add_flag("--corrupt-oracle", verify_opt.corrupt, "interpolation: corrupt the second oracle answer");
  verify->add_option("--out", verify_opt.out, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  verify_opt.seed_given = seed_opt->count() > 0;

  try {
    if (count->parsed()) return run_count(count_opt);
    if (gadget->parsed()) return run_gadget(gadget_opt);
    if (reduce->parsed()) return run_reduce(reduce_opt);
    return run_verify(verify_opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

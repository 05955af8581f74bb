// Command-line experiment runner: exact B_s constants, Table-1 fixture
// replication, convergence CSV runs, and the lemma verification suites.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lucaslcm/arith.hpp"
#include "lucaslcm/index_sets.hpp"
#include "lucaslcm/lcm_oracle.hpp"
#include "lucaslcm/periodic.hpp"
#include "lucaslcm/random_analysis.hpp"
#include "lucaslcm/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

#ifndef LUCASLCM_TABLE1_PATH
#define LUCASLCM_TABLE1_PATH "data/table1.txt"
#endif

using json = nlohmann::json;
using namespace lucaslcm;

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string rat(const ExactRational& q) { return q.get_str(); }

// Manifest echoed at the top of every output: command, parsed flags, seed,
// output path, tool version.
struct Manifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> flags;

  void add(const std::string& key, const std::string& value) { flags.emplace_back(key, value); }
  void print(std::ostream& os) const {
    os << "# command: " << command << "\n";
    for (const auto& [k, v] : flags) os << "# " << k << ": " << v << "\n";
    os << "# version: " << kVersion << "\n";
  }
  json to_json() const {
    json j{{"command", command}, {"version", kVersion}};
    for (const auto& [k, v] : flags) j[k] = v;
    return j;
  }
};

// Output sink: --out path or stdout.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open output file " << path << "\n";
      return false;
    }
    os = &file;
    return true;
  }
  std::ostream& out() { return *os; }
};

// The pattern may arrive via --pattern or as a bare token (`bs -`,
// `bs --++`): anything CLI11 did not recognize is a candidate word.
std::string pattern_argument(const std::string& flag_value, const CLI::App* sub) {
  if (!flag_value.empty()) return flag_value;
  for (const std::string& extra : sub->remaining()) {
    if (!extra.empty()) return extra;
  }
  return "";
}

std::vector<uint64_t> parse_n_list(const std::string& text) {
  std::vector<uint64_t> ns;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    const unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size() || v == 0) throw std::invalid_argument("bad n value: " + item);
    ns.push_back(v);
  }
  if (ns.empty()) throw std::invalid_argument("empty n list");
  return ns;
}

// Number of words with minimal period exactly L is sum_{d|L} mu(L/d) 2^d;
// the fixture lists each primitive word once.
uint64_t primitive_word_count(uint32_t max_period) {
  int64_t total = 0;
  for (uint64_t len = 1; len <= max_period; ++len) {
    for (uint64_t d = 1; d <= len; ++d) {
      if (len % d) continue;
      total += mobius(len / d) * (int64_t{1} << d);
    }
  }
  return static_cast<uint64_t>(total);
}

int cmd_bs(const std::string& pattern_word, bool as_json, const std::string& out_path) {
  SignPattern pattern(pattern_word);
  const BsReport report = B_constant(pattern);

  Sink sink;
  if (!sink.open(out_path)) return 2;

  Manifest manifest;
  manifest.command = "bs";
  manifest.add("pattern", pattern_word);
  if (!out_path.empty()) manifest.add("out", out_path);

  if (as_json) {
    json residues = json::array();
    for (const auto& [rho, lambda] : report.lambda) {
      residues.push_back(
          {{"rho", rho}, {"lambda", rat(lambda)}, {"c", rat(report.density.at(rho))}});
    }
    json doc{{"manifest", manifest.to_json()},
             {"pattern", report.pattern},
             {"B", rat(report.B)},
             {"B_double", report.B.get_d()},
             {"modulus", report.modulus},
             {"residues", residues}};
    sink.out() << doc.dump(2) << "\n";
  } else {
    manifest.print(sink.out());
    sink.out() << "B(" << report.pattern << ") = " << rat(report.B) << "\n";
  }
  return 0;
}

int cmd_table(uint32_t max_period, const std::string& fixture_path, const std::string& out_path) {
  std::map<std::string, ExactRational> fixture;
  try {
    fixture = load_table_fixture(fixture_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto computed = table_reproduce(max_period);

  Sink sink;
  if (!sink.open(out_path)) return 2;
  Manifest manifest;
  manifest.command = "table";
  manifest.add("max-period", std::to_string(max_period));
  manifest.add("fixture", fixture_path);
  if (!out_path.empty()) manifest.add("out", out_path);
  manifest.print(sink.out());

  uint64_t checked = 0, mismatches = 0, skipped = 0;
  std::set<std::string> distinct;
  for (const auto& [word, expected] : fixture) {
    const auto it = computed.find(word);
    if (it == computed.end()) {
      ++skipped;  // longer period than this run reproduces
      continue;
    }
    ++checked;
    distinct.insert(rat(it->second));
    if (it->second != expected) {
      ++mismatches;
      sink.out() << "mismatch: " << word << " fixture=" << rat(expected)
                 << " computed=" << rat(it->second) << "\n";
    }
  }
  const uint64_t expected_rows = primitive_word_count(max_period);
  if (checked != expected_rows) {
    sink.out() << "warning: checked " << checked << " fixture rows, expected " << expected_rows
               << " primitive patterns up to period " << max_period << "\n";
  }
  if (skipped) {
    sink.out() << "warning: skipped " << skipped << " rows with period above " << max_period
               << "\n";
  }
  sink.out() << checked << " rows checked, " << mismatches << " mismatches, " << distinct.size()
             << " distinct values\n";
  return mismatches ? 1 : 0;
}

struct ConvergeArgs {
  std::string mode;
  std::string pattern_word;
  std::string n_text;
  uint64_t seed = 12345;
  uint32_t trials = 50;
  double tol = 1e-15;
  bool structural = false;
  std::string out_path;
};

int cmd_converge(const ConvergeArgs& args) {
  std::vector<uint64_t> ns;
  try {
    ns = parse_n_list(args.n_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const uint64_t n_max = *std::max_element(ns.begin(), ns.end());

  // Mode-specific setup and caps. Exact big-integer modes stop at n = 1000;
  // the structural / expectation paths carry the large-n runs.
  constexpr uint64_t kExactCap = 1000;
  constexpr uint64_t kSieveCap = 10000000;
  const bool exact_mode = (args.mode == "lucas-plain" || args.mode == "random-mc" ||
                           (args.mode == "periodic" && !args.structural));
  if (exact_mode && n_max > kExactCap) {
    std::cerr << "error: mode " << args.mode
              << " computes exact big integers and is capped at n = " << kExactCap << "; use "
              << (args.mode == "periodic" ? "--structural" : "random-exact")
              << " for large n\n";
    return 2;
  }
  if (!exact_mode && n_max > kSieveCap) {
    std::cerr << "error: totient sieve capped at n = " << kSieveCap << "\n";
    return 2;
  }

  SeriesConfig cfg;
  cfg.tolerance = args.tol;

  std::optional<SignPattern> pattern;
  double target = 0.0;
  if (args.mode == "periodic") {
    if (args.pattern_word.empty()) {
      std::cerr << "error: converge periodic requires --pattern\n";
      return 2;
    }
    pattern.emplace(args.pattern_word);
    target = B_constant(*pattern).B.get_d();
  } else if (args.mode == "lucas-plain") {
    target = 4.0;
  } else {
    target = c_closed_form(cfg);
  }

  Sink sink;
  if (!sink.open(args.out_path)) return 2;
  Manifest manifest;
  manifest.command = "converge";
  manifest.add("mode", args.mode);
  if (pattern) manifest.add("pattern", args.pattern_word);
  manifest.add("n", args.n_text);
  if (args.mode == "periodic") manifest.add("structural", args.structural ? "true" : "false");
  if (args.mode == "random-mc") {
    manifest.add("seed", std::to_string(args.seed));
    manifest.add("trials", std::to_string(args.trials));
  }
  manifest.add("tol", g12(args.tol));
  if (!args.out_path.empty()) manifest.add("out", args.out_path);
  manifest.print(sink.out());

  // One totient table covering the largest structural run.
  std::optional<TotientTable> table;
  if (args.mode == "periodic" && args.structural) {
    if (*std::min_element(ns.begin(), ns.end()) < 4) {
      std::cerr << "error: structural mode requires n >= 4\n";
      return 2;
    }
    table.emplace(static_cast<uint32_t>(3 * n_max));
  }

  sink.out() << "n,estimate,target,ratio\n";
  const double pi2 = GoldenRatioConstants::pi_squared;
  const double log_alpha = GoldenRatioConstants::log_alpha;
  for (const uint64_t n64 : ns) {
    const auto n = static_cast<uint32_t>(n64);
    const double nsq = double(n) * double(n);
    double estimate = 0.0;
    if (args.mode == "periodic" && args.structural) {
      estimate = structural_log(n, *pattern, *table) * pi2 / (nsq * log_alpha);
    } else if (args.mode == "periodic") {
      estimate = lcm_shifted(n, *pattern).log_value * pi2 / (nsq * log_alpha);
    } else if (args.mode == "lucas-plain") {
      estimate = lcm_lucas(n).log_value * pi2 / (nsq * log_alpha);
    } else if (args.mode == "random-exact") {
      if (n < 4) {
        std::cerr << "error: random-exact requires n >= 4\n";
        return 2;
      }
      estimate = expected_structural_sum(n) * pi2 / nsq;
    } else {  // random-mc
      estimate = monte_carlo(n, args.trials, args.seed).normalized;
    }
    sink.out() << n << "," << g12(estimate) << "," << g12(target) << ","
               << g12(estimate / target) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, bool json_only, const std::string& out_path) {
  std::vector<SuiteResult> results;
  if (suite == "identities") {
    results.push_back(suite_shift_identities(200));
  } else if (suite == "products") {
    results.push_back(suite_product_formula(200));
    results.push_back(suite_phi_structure(500));
  } else if (suite == "sets") {
    results.push_back(suite_divisor_set_identity(300));
    results.push_back(suite_h_counts(200, 500));
    results.push_back(suite_union_decomposition(6, 2000));
    results.push_back(suite_p_exponent_consistency(120, 240));
  } else if (suite == "lemma16") {
    results.push_back(suite_membership_probability(60, 48));
  } else {  // all
    results = run_all_suites();
  }

  Sink sink;
  if (!sink.open(out_path)) return 2;
  Manifest manifest;
  manifest.command = "verify";
  manifest.add("suite", suite);
  if (!out_path.empty()) manifest.add("out", out_path);

  bool all_passed = true;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    all_passed = all_passed && r.passed();
    json entry{{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}};
    if (!r.passed()) entry["first_failure"] = r.first_failure;
    suites.push_back(entry);
  }
  json doc{{"manifest", manifest.to_json()}, {"suites", suites}, {"passed", all_passed}};

  if (json_only) {
    sink.out() << doc.dump(2) << "\n";
  } else {
    manifest.print(sink.out());
    for (const SuiteResult& r : results) {
      sink.out() << "suite " << r.name << ": " << r.checks << " checks, " << r.failures
                 << " failures\n";
      if (!r.passed()) sink.out() << "  first counterexample: " << r.first_failure << "\n";
    }
    sink.out() << doc.dump() << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shifted-Lucas lcm constants: exact B_s, Table-1 replication, "
               "convergence runs, lemma verification"};
  app.require_subcommand(1);

  // bs
  auto* bs = app.add_subcommand("bs", "print the exact rational B(pattern)");
  std::string bs_pattern, bs_out;
  bool bs_json = false;
  bs->add_option("--pattern", bs_pattern, "sign pattern over {+,-}");
  bs->add_flag("--json", bs_json, "emit the per-residue (rho, c, lambda) table as JSON");
  bs->add_option("--out", bs_out, "write output to this path");
  bs->allow_extras();  // lets `bs -` and `bs --++` pass the word directly

  // table
  auto* table = app.add_subcommand("table", "recompute every fixture row and diff");
  uint32_t table_period = 6;
  std::string table_fixture = LUCASLCM_TABLE1_PATH, table_out;
  table->add_option("--max-period", table_period, "longest pattern period to reproduce")
      ->check(CLI::Range(1u, 8u));
  table->add_option("--fixture", table_fixture, "fixture file of pattern,value rows");
  table->add_option("--out", table_out, "write output to this path");

  // converge
  auto* converge = app.add_subcommand("converge", "normalized lcm growth vs the limit constant");
  ConvergeArgs cargs;
  converge->add_option("mode", cargs.mode, "periodic | random-exact | random-mc | lucas-plain")
      ->required()
      ->check(CLI::IsMember({"periodic", "random-exact", "random-mc", "lucas-plain"}));
  converge->add_option("--pattern", cargs.pattern_word, "sign pattern (periodic mode)");
  converge->add_option("--n", cargs.n_text, "comma-separated n values")->required();
  converge->add_option("--seed", cargs.seed, "random-mc seed");
  converge->add_option("--trials", cargs.trials, "random-mc trials per n");
  converge->add_option("--tol", cargs.tol, "series tolerance for dilogarithm sums");
  converge->add_flag("--structural", cargs.structural,
                     "periodic mode: totient-sum structural estimate instead of exact lcm");
  converge->add_option("--out", cargs.out_path, "write CSV to this path");

  // verify
  auto* verify = app.add_subcommand("verify", "run a lemma verification suite");
  std::string verify_suite, verify_out;
  bool verify_json = false;
  verify->add_option("suite", verify_suite, "identities | products | sets | lemma16 | all")
      ->required()
      ->check(CLI::IsMember({"identities", "products", "sets", "lemma16", "all"}));
  verify->add_flag("--json", verify_json, "emit only the JSON summary");
  verify->add_option("--out", verify_out, "write output to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bs->parsed()) {
      const std::string word = pattern_argument(bs_pattern, bs);
      if (word.empty()) {
        std::cerr << "error: bs needs a pattern (flag --pattern or bare word)\n";
        return 2;
      }
      return cmd_bs(word, bs_json, bs_out);
    }
    if (table->parsed()) return cmd_table(table_period, table_fixture, table_out);
    if (converge->parsed()) return cmd_converge(cargs);
    if (verify->parsed()) return cmd_verify(verify_suite, verify_json, verify_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

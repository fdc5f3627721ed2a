#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "torsionlab/arith.hpp"
#include "torsionlab/verify.hpp"

using json = nlohmann::ordered_json;
using namespace torsionlab;

namespace {

constexpr const char* kArtifactVersion = "1.0.0";
constexpr const char* kSchemaVersion = "1.0";

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string cache_dir_from_env() {
  const char* dir = std::getenv("TORSIONLAB_CACHE_DIR");
  return dir ? dir : "";
}

std::shared_ptr<RingContext> make_context(int n, int trunc_bits) {
  return RingContext::with_cache(n, trunc_bits, cache_dir_from_env());
}

json envelope(const std::string& command, json parameters, json results, long elapsed_ms) {
  json env;
  env["command"] = command;
  env["parameters"] = std::move(parameters);
  env["results"] = std::move(results);
  env["versions"] = {{"artifact", kArtifactVersion}, {"spec", kSchemaVersion}};
  env["elapsed_ms"] = elapsed_ms;
  return env;
}

std::vector<long long> parse_set(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("malformed integer list");
    std::size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("malformed integer list");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

json report_json(const TorsionReport& r) {
  json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["method"] = r.method;
  j["tau"] = int_str(r.tau);
  j["tau2"] = r.tau2;
  j["odd_part"] = int_str(r.odd_part);
  j["odd_part_verified"] = r.odd_part_verified;
  j["monomials_considered"] = r.monomials_considered;
  j["truncated"] = r.truncated;
  j["trunc_bits"] = r.trunc_bits;
  j["provenance"] = r.provenance;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json bound_json(const HSpinBound& b) {
  json j;
  j["family"] = "hspin";
  j["n"] = b.n;
  j["method"] = "closed-form";
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["equality_known"] = b.equality_known;
  j["case_tag"] = b.case_tag;
  j["provenance"] = b.provenance;
  return j;
}

json check_json(const CheckResult& r) {
  json j;
  j["check_id"] = r.check_id;
  j["parameters"] = r.parameters;
  j["passed"] = r.passed;
  j["witness"] = r.witness;
  j["citation"] = r.citation;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json cert_json(const DecompositionCertificate& cert, long long degree) {
  json pairs = json::array();
  for (const auto& [a, b] : cert.pairs) pairs.push_back({a, b});
  int a = 0;
  while ((1LL << a) - 1 < degree) ++a;
  json j;
  j["singletons"] = cert.singletons;
  j["pairs"] = pairs;
  j["degree"] = degree;
  j["a"] = a;
  return j;
}

int cmd_table(int s_min, int s_max, const std::string& format) {
  if (s_min < 2 || s_min > s_max || s_max > 64) {
    std::cerr << "table: require 2 <= s-min <= s-max <= 64\n";
    return kExitUsage;
  }
  auto t0 = std::chrono::steady_clock::now();
  if (format == "csv") {
    std::cout << "s,n0,m0\n";
    for (int s = s_min; s <= s_max; ++s) {
      std::cout << s << "," << int_str(n0_of(s)) << "," << m0_of(s) << "\n";
    }
    return kExitOk;
  }
  json rows = json::array();
  for (int s = s_min; s <= s_max; ++s) {
    json row;
    row["s"] = s;
    row["n0"] = int_str(n0_of(s));  // decimal string: exact for every s
    row["m0"] = m0_of(s);
    rows.push_back(std::move(row));
  }
  long elapsed = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - t0)
                                       .count());
  json params = {{"s_min", s_min}, {"s_max", s_max}, {"format", format}};
  std::cout << envelope("table", params, rows, elapsed).dump(2) << "\n";
  return kExitOk;
}

int cmd_tau(const std::string& family, long long n, const std::string& method, bool as_json,
            std::optional<int> m_flag, std::optional<std::string> j_flag, int max_oracle_n,
            bool truncated, int trunc_bits) {
  auto t0 = std::chrono::steady_clock::now();
  json params = {{"family", family}, {"n", n}, {"method", method}};
  json results;

  auto finish = [&](const json& res) {
    long elapsed = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count());
    if (as_json) {
      std::cout << envelope("tau", params, res, elapsed).dump(2) << "\n";
    } else {
      std::cout << res.dump(2) << "\n";
    }
    return kExitOk;
  };

  if (method == "closed") {
    if (family == "spin") {
      long long tau2 = tau2_spin(n);
      json r = {{"family", "spin"}, {"n", n}, {"method", "closed-form"},
                {"tau", int_str(int_pow2(static_cast<unsigned long>(tau2)))},
                {"tau2", tau2},
                {"provenance", json::array({"thm:totaromain"})}};
      return finish(r);
    }
    if (family == "so" || family == "pgo") {
      long long tau2 = (family == "so") ? tau2_so(n) : tau2_pgo(n);
      json r = {{"family", family}, {"n", n}, {"method", "closed-form"},
                {"tau", int_str(int_pow2(static_cast<unsigned long>(tau2)))},
                {"tau2", tau2},
                {"provenance", json::array({"closed form"})}};
      return finish(r);
    }
    if (family == "hspin") {
      if (n == 2) {
        // Recorded constant: the rank-2 half-spin group is a product with a
        // special orthogonal factor, outside the flag-variety model here.
        json r = {{"family", "hspin"}, {"n", 2}, {"method", "closed-form"},
                  {"tau", "2"}, {"tau2", 1},
                  {"provenance", json::array({"hspin4-constant"})}};
        return finish(r);
      }
      if (n < 4 || n % 2 != 0) {
        std::cerr << "tau: hspin requires even n (n=2 only via --method closed)\n";
        return kExitUsage;
      }
      return finish(bound_json(hspin_bounds(n)));
    }
  }
  if (method == "elementary") {
    if (family != "hspin" || n < 4 || n % 2 != 0) {
      std::cerr << "tau: --method elementary applies to hspin with even n >= 4\n";
      return kExitUsage;
    }
    long long bound = hspin_elementary_bound(n);
    json r = {{"family", "hspin"}, {"n", n}, {"method", "elementary"},
              {"tau2_upper_bound", bound},
              {"provenance", json::array({"lem:s22mchoose2"})}};
    return finish(r);
  }
  if (method == "oracle") {
    if (n > max_oracle_n) {
      std::cerr << "tau: oracle capped at n=" << max_oracle_n
                << " (raise with --max-oracle-n)\n";
      return kExitUsage;
    }
    if (n > 8) {
      std::cerr << "tau: warning: oracle enumeration beyond n=8 grows sharply\n";
    }
    SubringLabel label;
    if (family == "hspin") label = SubringLabel::R_hspin;
    else if (family == "spin") label = SubringLabel::R_tilde_spin;
    else if (family == "so") label = SubringLabel::R_prime_so;
    else if (family == "pgo") label = SubringLabel::R_bar_pgo;
    else {
      std::cerr << "tau: unknown family " << family << "\n";
      return kExitUsage;
    }
    auto ctx = make_context(static_cast<int>(n), truncated ? trunc_bits : 0);
    try {
      TorsionReport report = torsion_oracle(*ctx, label);
      return finish(report_json(report));
    } catch (const std::invalid_argument& ex) {
      std::cerr << "tau: " << ex.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& ex) {
      std::cerr << "tau: " << ex.what() << "\n";
      return kExitCheckFailure;
    }
  }
  if (method == "certificate") {
    if (family != "hspin" || !m_flag || !j_flag) {
      std::cerr << "tau: --method certificate requires --family hspin, --m and --J\n";
      return kExitUsage;
    }
    std::vector<long long> J = parse_set(*j_flag);
    params["m"] = *m_flag;
    params["J"] = J;
    long long degJ = set_degree(J);
    int a = 0;
    while ((1LL << a) - 1 < degJ) ++a;
    int bits = truncated ? (static_cast<int>(n) - a - 1) + 2 : 0;
    auto ctx = make_context(static_cast<int>(n), bits);
    try {
      CertificateBound cb = certificate_bound(*ctx, *m_flag, J);
      json r = {{"family", "hspin"}, {"n", n}, {"method", "certificate"},
                {"p", cb.p},
                {"tau2_upper_bound", cb.p},
                {"t_valuation", cb.t_valuation.str()},
                {"d_valuation", cb.d_variant ? cb.d_valuation.str() : "n/a"},
                {"verified", cb.verified},
                {"provenance", json::array({"prop:totaro2divisible"})}};
      int rc = finish(r);
      return cb.verified ? rc : kExitCheckFailure;
    } catch (const std::invalid_argument& ex) {
      std::cerr << "tau: " << ex.what() << "\n";
      return kExitUsage;
    }
  }
  std::cerr << "tau: unsupported family/method combination\n";
  return kExitUsage;
}

int cmd_verify(const std::string& suite, std::optional<int> n, bool exact, bool truncated,
               const std::string& csv_path) {
  VerifyOptions opts;
  if (exact) opts.mode = VerifyMode::exact;
  if (truncated) opts.mode = VerifyMode::truncated;
  std::vector<CheckResult> results;
  try {
    results = run_suite(suite, n, opts);
  } catch (const BudgetExceeded& ex) {
    std::cerr << "verify: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "verify: " << ex.what() << "\n";
    return kExitUsage;
  }
  bool all_passed = true;
  for (const auto& r : results) {
    std::cout << check_json(r).dump() << "\n";
    all_passed = all_passed && r.passed;
  }
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    csv << "check_id,n,passed,elapsed_ms\n";
    for (const auto& r : results) {
      auto it = r.parameters.find("n");
      csv << r.check_id << "," << (it == r.parameters.end() ? "" : it->second) << ","
          << (r.passed ? "true" : "false") << "," << r.elapsed_ms << "\n";
    }
  }
  return all_passed ? kExitOk : kExitCheckFailure;
}

int cmd_decomp(const std::string& set_csv, std::optional<long long> n, bool strong) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<long long> J = parse_set(set_csv);
  json params = {{"set", J}, {"strong", strong}};
  if (n) params["n"] = *n;
  json results;
  long long degree = set_degree(J);
  auto cert = is_totaro_decomposable(J);
  results["decomposable"] = cert.has_value();
  results["degree"] = degree;
  if (cert) results["certificate"] = cert_json(*cert, degree);
  if (strong) {
    if (!n) {
      std::cerr << "decomp: --strong requires --n\n";
      return kExitUsage;
    }
    results["strongly_decomposable"] = is_strongly_totaro_decomposable(J, *n);
  }
  long elapsed = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - t0)
                                       .count());
  std::cout << envelope("decomp", params, results, elapsed).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsionlab: exact Chow-ring arithmetic and torsion indexes for the"
               " two-step D-type flag variety"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads for enumerations (0 = default)");

  auto* table = app.add_subcommand("table", "n0/m0 threshold table");
  int s_min = 2, s_max = 10;
  std::string format = "csv";
  table->add_option("--s-min", s_min, "first s")->required();
  table->add_option("--s-max", s_max, "last s")->required();
  table->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* tau = app.add_subcommand("tau", "torsion index of a group family");
  std::string family, method = "closed";
  long long n_tau = 0;
  bool tau_json = false, tau_trunc = false;
  int m_flag = 0, max_oracle_n = 8, trunc_bits = 10;
  std::string j_flag;
  tau->add_option("--family", family, "spin|so|pgo|hspin")
      ->required()
      ->check(CLI::IsMember({"spin", "so", "pgo", "hspin"}));
  tau->add_option("--n", n_tau, "rank parameter n (group is of rank-2n type)")->required();
  tau->add_option("--method", method, "closed|oracle|elementary|certificate")
      ->check(CLI::IsMember({"closed", "oracle", "elementary", "certificate"}));
  tau->add_flag("--json", tau_json, "wrap the report in an output envelope");
  auto* m_opt = tau->add_option("--m", m_flag, "certificate divisor m");
  auto* j_opt = tau->add_option("--J", j_flag, "certificate set, e.g. 1,2,4");
  tau->add_option("--max-oracle-n", max_oracle_n, "raise the oracle rank cap (default 8)");
  tau->add_flag("--truncated", tau_trunc, "run the oracle mod 2^k with an exact subsample");
  tau->add_option("--trunc-bits", trunc_bits, "k for --truncated (default 10)");

  auto* verify = app.add_subcommand("verify", "identity and congruence suites");
  std::string suite;
  int n_verify = 0;
  bool v_exact = false, v_trunc = false;
  std::string csv_path;
  verify->add_option("--suite", suite, "lemma32|skj|dsquared|appendix8|hspin12|prop37|all")
      ->required()
      ->check(CLI::IsMember({"lemma32", "skj", "dsquared", "appendix8", "hspin12", "prop37",
                             "all"}));
  auto* n_opt = verify->add_option("--n", n_verify, "rank for the rank-parameterized suites");
  auto* ex_flag = verify->add_flag("--exact", v_exact, "run every check exactly");
  verify->add_flag("--truncated", v_trunc, "run congruence checks mod 2^k")->excludes(ex_flag);
  verify->add_option("--csv", csv_path, "write a summary table to this file");

  auto* decomp = app.add_subcommand("decomp", "decomposability of an integer set");
  std::string set_csv;
  long long n_decomp = 0;
  bool strong = false;
  decomp->add_option("--set", set_csv, "comma-separated positive integers")->required();
  auto* nd_opt = decomp->add_option("--n", n_decomp, "ambient rank for --strong");
  decomp->add_flag("--strong", strong, "also test strong decomposability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (table->parsed()) return cmd_table(s_min, s_max, format);
    if (tau->parsed()) {
      return cmd_tau(family, n_tau, method, tau_json,
                     m_opt->count() ? std::optional<int>(m_flag) : std::nullopt,
                     j_opt->count() ? std::optional<std::string>(j_flag) : std::nullopt,
                     max_oracle_n, tau_trunc, trunc_bits);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, n_opt->count() ? std::optional<int>(n_verify) : std::nullopt,
                        v_exact, v_trunc, csv_path);
    }
    if (decomp->parsed()) {
      return cmd_decomp(set_csv,
                        nd_opt->count() ? std::optional<long long>(n_decomp) : std::nullopt,
                        strong);
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}

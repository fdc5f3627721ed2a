#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/sublattice.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

struct CheckResult {
  std::string check_id;
  std::map<std::string, std::string> parameters;
  bool passed = false;
  std::string witness;  // serialized element, certificate or counterexample
  std::string citation;
  long elapsed_ms = 0;
};

// suite_default lets each check pick its documented mode (the degree-35 scan
// runs mod-2^7 with an exact subsample, everything else exact). `truncated`
// forces mod-2^k wherever a check is congruence-shaped and truncation is
// sound; each such check picks its own k with one bit of headroom. Checks
// that assert exact equalities always run exact.
enum class VerifyMode { suite_default, exact, truncated };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::suite_default;
  int exact_budget_n = 9;
  unsigned subsample_stride = 100;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Identity tags a CheckResult.citation may carry; run_suite refuses results
// whose citation is not listed here.
const std::set<std::string>& citation_manifest();

// vhat(e1^{deg J} c(I) t^{n-1}) = n-a-1 for Totaro-decomposable J of degree
// 2^a - 1 and >= n-a otherwise, exhaustively over J ⊆ [1, n-1].
std::vector<CheckResult> check_lemma_totarodecomp(int n, const VerifyOptions& opts = {});

// vhat(e1^{deg J} c(I) t^{n-1}) >= n-1-S2(deg J) for every J ⊆ [1, n-1].
std::vector<CheckResult> check_remark_generalJ(int n, const VerifyOptions& opts = {});

// t^{n-1+k} = t^{n-1} S_{k,1} + ... + t S_{k+n-2,n-1} mod 2R', 1 <= k <= n-1,
// with S_{k,j} built by dynamic programming; plus S_{k,k} = c_k.
std::vector<CheckResult> check_skj_expansion(int n, const VerifyOptions& opts = {});

// d_i^2 = C(n,i) t^{2i} mod 2R' for all i, and C(2n,i) t^i in the degree-i
// lattice of R- for i <= 2n-2.
std::vector<CheckResult> check_dsquared_and_twoni(int n, const VerifyOptions& opts = {});

// The n = 8 congruence battery plus the full degree-35 scan of monomials
// e1^i (2t)^{i0} d(...)^{...}, asserting minimum 2-divisibility exactly 6.
std::vector<CheckResult> check_appendix_n8(const VerifyOptions& opts = {});

// Oracle value 4 at n = 6 for the hspin subring and the structural
// R'-divisibility pattern of sampled top-degree monomials.
std::vector<CheckResult> check_example_hspin12(const VerifyOptions& opts = {});

// Both displayed divisibility equalities of the certificate construction.
std::vector<CheckResult> check_prop_totaro2divisible(int n, int m,
                                                     const std::vector<long long>& J,
                                                     const VerifyOptions& opts = {});

// Named suites: lemma32 | skj | dsquared | appendix8 | hspin12 | prop37 | all.
// n applies to the suites parameterized by rank; when absent those suites run
// their documented default ranks. Results are sorted by check_id.
std::vector<CheckResult> run_suite(const std::string& suite, std::optional<int> n,
                                   const VerifyOptions& opts = {});

}  // namespace torsionlab

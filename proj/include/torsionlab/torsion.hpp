#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/chowring.hpp"
#include "torsionlab/decomp.hpp"

namespace torsionlab {

// Smallest n with C(n,2) + 1 >= 2^{2s}. Grows like sqrt(2)*2^s, so the value
// is exact-integer valued even for s up to 64.
Int n0_of(int s);

// Smallest m >= 0 with 2m - tau2_spin(m+1) > s - 3; defined for s >= 2 and
// computed by memoized mutual recursion with tau2_spin.
int m0_of(int s);

// tau2 of Spin(2n): 0 for n in [1,3], 1 for n = 4, and for n in (2^s, 2^{s+1}]
// with s >= 2 the three-clause recursion over the thresholds m0 and n0.
long long tau2_spin(long long n);

// tau2 of SO(2n) = n-1 and of PGO+(2n) = n-1 (+1 when n is a power of 2).
long long tau2_so(long long n);
long long tau2_pgo(long long n);

// The elementary bound on tau2 of HSpin(2n) for even n >= 4:
//   n - S2(C(n,2))      if v2(n) = 1,
//   n - S2(C(n,2)) + 1  if v2(n) >= 2.
long long hspin_elementary_bound(long long n);

struct HSpinBound {
  long long n = 0;
  long long lower = 0;  // tau2_spin(n)
  long long upper = 0;
  bool equality_known = false;
  std::string case_tag;  // "generic_2x" | "n4_or_n12_4x" | "pow2_or_3pow2_8x"
  std::vector<std::string> provenance;
};

// Case selection follows the clause order of the bound theorem: the explicit
// n = 4, 6, 12 clauses take precedence, the 3*2^{s-1} clause requires s >= 4.
// The reported upper bound is the minimum of the case bound and the elementary
// bound; equality_known comes only from the quoted interval clauses (with the
// v2(n) = 1 clause taken in its wider corollary form, flagged in provenance),
// never from oracle runs. When equality is known the upper bound is the lower.
HSpinBound hspin_bounds(long long n);

struct CertificateBound {
  int p = 0;  // n - a - 1 where deg J = 2^a - 1
  RingElement t_variant;                  // e1^{deg J} d(I \ {n-m+1}) t^{2n-m}
  std::optional<RingElement> d_variant;   // e1^{deg J} d(I \ {n-m+1}) d_m^{(2n-m)/m}
  Valuation t_valuation = Valuation::infinity();
  Valuation d_valuation = Valuation::infinity();
  bool verified = false;  // every built variant has 2-divisibility exactly p
};

// Builds the two certificate elements for a strongly Totaro-decomposable J
// and verifies their 2-divisibility equals p by direct computation in ctx.
// Preconditions (each reported by name on failure): m | 2^{v2(n)} with
// 2 <= m <= n/2; J strongly Totaro-decomposable; I = [1,n-1] \ J contains
// [n-m+1, n-1]. The d-power variant is built only when m = 2^{v2(n)}.
// A truncated ctx must carry at least p+2 bits.
CertificateBound certificate_bound(const RingContext& ctx, int m,
                                   const std::vector<long long>& J);

}  // namespace torsionlab

#include "torsionlab/torsion.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "torsionlab/arith.hpp"
#include "torsionlab/generators.hpp"

namespace torsionlab {

namespace {

std::mutex table_mutex;
std::map<int, Int> n0_table;
std::map<int, int> m0_table;
std::map<long long, long long> tau2_table;

// The integer s with n in (2^s, 2^{s+1}], for n >= 2.
int s_of(long long n) {
  int s = 0;
  while ((1LL << (s + 1)) < n) ++s;
  return s;
}

Int n0_locked(int s) {
  auto it = n0_table.find(s);
  if (it != n0_table.end()) return it->second;
  Int threshold = int_pow2(static_cast<unsigned long>(2 * s)) - 1;  // C(n,2) >= 2^{2s} - 1
  // n(n-1) >= 2*threshold; start just below the real root and walk up.
  Int n = sqrt(2 * threshold);
  if (n > 2) n -= 2;
  if (n < 0) n = 0;
  while (n * (n - 1) / 2 < threshold) ++n;
  n0_table[s] = n;
  return n;
}

long long tau2_spin_locked(long long n);

int m0_locked(int s) {
  auto it = m0_table.find(s);
  if (it != m0_table.end()) return it->second;
  int m = 0;
  while (!(2LL * m - tau2_spin_locked(m + 1) > s - 3)) ++m;
  m0_table[s] = m;
  return m;
}

long long tau2_spin_locked(long long n) {
  if (n < 1) throw std::invalid_argument("tau2_spin: n must be >= 1");
  if (n <= 3) return 0;
  if (n == 4) return 1;
  auto it = tau2_table.find(n);
  if (it != tau2_table.end()) return it->second;
  int s = s_of(n);  // s >= 2 for n >= 5
  int m0 = m0_locked(s);
  Int n0 = n0_locked(s);
  long long r;
  if (n <= (1LL << s) + m0) {
    r = n - 2 * s + 1;
  } else if (Int(static_cast<long>(n)) < n0) {
    r = n - 2 * s;
  } else {
    r = n - 2 * s - 1;
  }
  tau2_table[n] = r;
  return r;
}

}  // namespace

Int n0_of(int s) {
  if (s < 0) throw std::invalid_argument("n0_of: s must be >= 0");
  std::lock_guard<std::mutex> lock(table_mutex);
  return n0_locked(s);
}

int m0_of(int s) {
  if (s < 2) throw std::invalid_argument("m0_of: s must be >= 2");
  std::lock_guard<std::mutex> lock(table_mutex);
  return m0_locked(s);
}

long long tau2_spin(long long n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  return tau2_spin_locked(n);
}

long long tau2_so(long long n) {
  if (n < 1) throw std::invalid_argument("tau2_so: n must be >= 1");
  return n - 1;
}

long long tau2_pgo(long long n) {
  if (n < 1) throw std::invalid_argument("tau2_pgo: n must be >= 1");
  return n - 1 + (is_power_of_2(n) ? 1 : 0);
}

long long hspin_elementary_bound(long long n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("hspin_elementary_bound: n must be even, n >= 4");
  }
  long long v2n = __builtin_ctzll(static_cast<unsigned long long>(n));
  long long s2 = digit_sum_2(binomial(n, 2));
  return n - s2 + (v2n >= 2 ? 1 : 0);
}

HSpinBound hspin_bounds(long long n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("hspin_bounds: n must be even, n >= 4");
  }
  HSpinBound out;
  out.n = n;
  out.lower = tau2_spin(n);
  out.provenance.push_back("lower: thm:totaromain via lem:basicbound");

  const int s = s_of(n);
  const long long pow_s = 1LL << s;
  const bool n_is_pow2 = is_power_of_2(n);
  const bool n_is_3pow2 = (n % 3 == 0) && is_power_of_2(n / 3);
  const long long v2n = __builtin_ctzll(static_cast<unsigned long long>(n));

  long long incr;
  if (n == 6) {
    incr = 1;
    out.case_tag = "generic_2x";
  } else if (n == 4 || n == 12) {
    incr = 2;
    out.case_tag = "n4_or_n12_4x";
  } else if (n_is_pow2) {
    // n = 2^{s+1} with s >= 2, i.e. n >= 8.
    incr = 3;
    out.case_tag = "pow2_or_3pow2_8x";
  } else if (n_is_3pow2 && s >= 4) {
    // n = 3*2^{s-1} with s >= 4, i.e. n >= 24.
    incr = 3;
    out.case_tag = "pow2_or_3pow2_8x";
  } else {
    incr = 1;
    out.case_tag = "generic_2x";
  }
  out.provenance.push_back("upper case: thm:main [" + out.case_tag + "]");

  long long elementary = hspin_elementary_bound(n);
  out.upper = std::min(out.lower + incr, elementary);
  if (elementary < out.lower + incr) {
    out.provenance.push_back("upper tightened by lem:s22mchoose2");
  }

  // Equality intervals. The 2^{s-3} endpoints are fractional for s < 3, so
  // the comparisons are done on 8n.
  bool equality = false;
  if (s >= 2) {
    long long m0 = m0_of(s);
    Int n0 = n0_of(s);
    Int N(static_cast<long>(n));
    Int P(static_cast<long>(pow_s));
    if (n > pow_s && n <= pow_s + m0) equality = true;
    if (8 * N > 9 * P && 4 * N < 5 * P) equality = true;
    if (4 * N > 5 * P && N < n0) equality = true;
    if (n > pow_s + pow_s / 2 && n < 2 * pow_s) equality = true;
    if (equality) out.provenance.push_back("equality: thm:main intervals (cor:intervalupperbd)");
    if (!equality && v2n == 1 && s >= 3) {
      if ((N > P + static_cast<long>(m0 + 1) && N < n0) || (N > n0 && n < 2 * pow_s)) {
        equality = true;
        out.provenance.push_back("equality: cor:3powerthreeupp (v2(n)=1 clause)");
        out.provenance.push_back(
            "note: the v2(n)=1 equality clause is taken in its wider corollary form; "
            "the theorem statement lists a narrower variant");
        out.provenance.push_back(
            "note: cor:3powerthreeupp rests on recursively constructed decomposable sets; "
            "certified here only over searched ranges");
      }
    }
  }
  out.equality_known = equality;
  if (equality) out.upper = out.lower;
  return out;
}

CertificateBound certificate_bound(const RingContext& ctx, int m,
                                   const std::vector<long long>& J) {
  const long long n = ctx.n();
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("certificate_bound: n must be even, n >= 4");
  }
  const long long v2n = __builtin_ctzll(static_cast<unsigned long long>(n));
  const long long pow_v2n = 1LL << v2n;
  if (m < 2 || m > n / 2 || !is_power_of_2(m) || pow_v2n % m != 0) {
    throw std::invalid_argument(
        "certificate_bound: precondition 'm divides 2^{v2(n)} and 2 <= m <= n/2' fails");
  }
  if (!is_strongly_totaro_decomposable(J, n)) {
    throw std::invalid_argument(
        "certificate_bound: precondition 'J strongly Totaro-decomposable' fails");
  }
  std::set<long long> jset(J.begin(), J.end());
  std::vector<int> I;
  for (long long i = 1; i <= n - 1; ++i) {
    if (!jset.count(i)) I.push_back(static_cast<int>(i));
  }
  for (long long i = n - m + 1; i <= n - 1; ++i) {
    if (jset.count(i)) {
      throw std::invalid_argument(
          "certificate_bound: precondition 'I contains [n-m+1, n-1]' fails");
    }
  }

  long long degJ = set_degree(J);
  int a = 0;
  while ((1LL << a) - 1 < degJ) ++a;  // degJ = 2^a - 1 by decomposability
  CertificateBound out;
  out.p = static_cast<int>(n - a - 1);
  if (ctx.truncated() && ctx.trunc_bits() < out.p + 2) {
    throw std::invalid_argument("certificate_bound: truncated context needs at least p+2 bits");
  }

  std::vector<int> I_minus;
  for (int i : I) {
    if (i != n - m + 1) I_minus.push_back(i);
  }

  RingElement base = mul(pow(gen_e(ctx, 1), static_cast<unsigned long>(degJ)),
                         d_of(ctx, I_minus));
  RingElement t_pow = pow(gen_t(ctx), static_cast<unsigned long>(2 * n - m));
  out.t_variant = mul(base, t_pow);
  out.t_valuation = valuation_hat(out.t_variant);
  bool ok = out.t_valuation == out.p;

  if (m == pow_v2n) {
    out.d_variant = mul(base, pow(chern_d(ctx, m), static_cast<unsigned long>((2 * n - m) / m)));
    out.d_valuation = valuation_hat(*out.d_variant);
    ok = ok && out.d_valuation == out.p;
  }
  out.verified = ok;
  return out;
}

}  // namespace torsionlab

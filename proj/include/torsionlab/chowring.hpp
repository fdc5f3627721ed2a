#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "torsionlab/bigint.hpp"
#include "torsionlab/valuation.hpp"

namespace torsionlab {

// Bit i-1 set <=> e_i is a factor. Valid indices are 1..n-1.
using Mask = std::uint64_t;

inline Mask mask_bit(int i) { return Mask(1) << (i - 1); }

// Sum of the indices in the mask.
inline int mask_degree(Mask m) {
  int d = 0;
  while (m) {
    d += __builtin_ctzll(m) + 1;
    m &= m - 1;
  }
  return d;
}

// A basis monomial e(I) * t^j of the ring: I square-free, 0 <= j <= n-1.
struct Monomial {
  Mask eset = 0;
  int tpow = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// One expansion e_i * e(I) = sum of c * e(I') in the square-free basis.
using ETerms = std::vector<std::pair<Mask, Int>>;

// Fixed rank n >= 2 of the D-type ring
//   Z[t, e_1..e_{n-1}] / ( t^n - 2e_1 t^{n-1} + ... + (-1)^{n-1} 2 e_{n-1} t,
//                          e_i^2 - 2e_{i-1}e_{i+1} + ... + (-1)^i e_{2i} ),
// with e_m = 0 for m >= n. The square-free monomials e(I) t^j, 0 <= j <= n-1,
// form a free basis; all arithmetic reduces eagerly to that basis.
//
// trunc_bits > 0 switches the context to mod-2^k coefficient arithmetic.
// This is an opt-in mode: it is sound only for congruence claims
// ("== 0 mod 2^m" with m <= k, valuations < k), never applied implicitly.
class RingContext {
 public:
  explicit RingContext(int n, int trunc_bits = 0);

  // Loads the e_i * e(I) table from cache_dir if present, else computes and
  // stores it there. Cache files are keyed by n only (expansions are exact
  // regardless of trunc_bits).
  static std::shared_ptr<RingContext> with_cache(int n, int trunc_bits,
                                                 const std::string& cache_dir);

  RingContext(const RingContext&) = delete;
  RingContext& operator=(const RingContext&) = delete;

  int n() const { return n_; }
  int dim_x() const { return dimx_; }  // (n-1)(n+2)/2
  int dim_y() const { return dimy_; }  // n(n-1)/2
  int trunc_bits() const { return trunc_bits_; }
  bool truncated() const { return trunc_bits_ > 0; }

  // Expansion of e_i * e(mask) in the square-free basis. For n small enough
  // the full table is precomputed at construction and reads are lock-free;
  // otherwise entries are built lazily under a mutex.
  const ETerms& e_times(int i, Mask mask) const;

  int monomial_degree(const Monomial& m) const { return mask_degree(m.eset) + m.tpow; }

  Monomial x0_monomial() const { return Monomial{(Mask(1) << (n_ - 1)) - 1, n_ - 1}; }

  void save_e_table(const std::string& path) const;

 private:
  struct DeferInit {};
  RingContext(int n, int trunc_bits, DeferInit);

  bool load_e_table(const std::string& path);
  void precompute_all();
  const ETerms& e_times_locked(int i, Mask mask) const;
  ETerms build_e_times(int i, Mask mask) const;

  int n_, dimx_, dimy_, trunc_bits_;
  bool precomputed_ = false;
  // Indexed by (i-1) * 2^{n-1} + mask when precomputed.
  mutable std::vector<std::unique_ptr<ETerms>> etable_;
  mutable std::mutex etable_mutex_;
};

// A finitely supported Z-linear combination of basis monomials, always held
// in canonical form (no zero coefficients; tpow <= n-1; e-sets square-free).
class RingElement {
 public:
  RingElement() : ctx_(nullptr) {}
  explicit RingElement(const RingContext& ctx) : ctx_(&ctx) {}

  const RingContext& context() const;
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<Monomial, Int>& terms() const { return coeffs_; }

  // -1 for zero, -2 for inhomogeneous, else the common degree.
  int homogeneous_degree() const;

  bool operator==(const RingElement& o) const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator*(const Int& c) const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator*(const Int& c, const RingElement& a) { return a * c; }

  // Internal: accumulate c * e(mask) * t^tpow, reducing t-overflow. Used by
  // the constructors in generators.cpp as well.
  void add_term(Mask mask, int tpow, const Int& c);
  void reduce_pending(std::map<std::pair<int, Mask>, Int>& pending);
  void normalize();

 private:
  friend RingElement mul(const RingElement&, const RingElement&);
  std::map<Monomial, Int> coeffs_;
  const RingContext* ctx_;
};

RingElement zero(const RingContext& ctx);
RingElement one(const RingContext& ctx);
RingElement gen_t(const RingContext& ctx);
RingElement gen_e(const RingContext& ctx, int i);

RingElement mul(const RingElement& a, const RingElement& b);
RingElement pow(const RingElement& a, unsigned long k);

// Multiply by a single generator; cheaper than building a one-term element.
RingElement mul_by_t(const RingElement& a);
RingElement mul_by_e(const RingElement& a, int i);

// The integer c with a = c * x0; a must be zero or homogeneous of degree dimX.
Int x0_coefficient(const RingElement& a);

// Divisibility of a in the ring: min over coefficients of v2, Infinity for 0.
// In a truncated context Infinity means ">= trunc_bits".
Valuation valuation_hat(const RingElement& a);

struct RPrimeTerm {
  Monomial monomial;
  Int coeff;
  int eweight;      // |I|
  bool divisible;   // 2^{|I|} | coeff
};

// Coordinates of a over the sublattice spanned by c(I) t^j = +-2^{|I|} e(I) t^j:
// a lies in R' iff every coefficient on e(I) t^j is divisible by 2^{|I|},
// and in 2^k R' iff 2^{k+|I|} divides every coefficient.
struct RPrimeCoordinates {
  bool in_rprime;
  std::vector<RPrimeTerm> rows;

  bool in_2k_rprime(long k) const;
};

RPrimeCoordinates rprime_coordinates(const RingElement& a);

// max k with a in 2^k R' = min over monomials of v2(coeff) - |I|.
// Throws if a is not in R'.
Valuation valuation_rprime(const RingElement& a);

// Every coefficient reduced to its least nonnegative residue mod 2^k.
RingElement truncate_mod_2k(const RingElement& a, unsigned long k);

// Canonical text form: terms sorted by e-set then t-power, e.g.
// "8*e{1,2,3}*t^3 - 4*t^2 + 1".
std::string to_canonical_string(const RingElement& a);

}  // namespace torsionlab

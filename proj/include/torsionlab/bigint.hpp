#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace torsionlab {

// Exact signed integers. Every ring coefficient and lattice entry is an Int;
// machine words are used only for exponents, indices and bitmasks.
using Int = mpz_class;

inline bool int_is_zero(const Int& a) { return mpz_sgn(a.get_mpz_t()) == 0; }

inline bool int_is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

// Exponent of 2 in a; a must be nonzero.
inline unsigned long int_trailing_zeros(const Int& a) {
  return mpz_scan1(a.get_mpz_t(), 0);
}

inline bool int_divisible_by_pow2(const Int& a, unsigned long k) {
  if (int_is_zero(a)) return true;
  return int_trailing_zeros(a) >= k;
}

inline Int int_pow2(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

// a / 2^{v2(a)}, keeping the sign; odd_part(0) = 0.
inline Int int_odd_part(const Int& a) {
  if (int_is_zero(a)) return 0;
  Int r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), int_trailing_zeros(a));
  return r;
}

// Least nonnegative residue of a modulo 2^k.
inline Int int_mod_pow2(const Int& a, unsigned long k) {
  Int r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

inline int int_cmpabs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::string int_str(const Int& a) { return a.get_str(); }

}  // namespace torsionlab

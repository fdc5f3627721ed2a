#include "torsionlab/arith.hpp"

#include <stdexcept>

namespace torsionlab {

Valuation v2(const Int& m) {
  if (mpz_sgn(m.get_mpz_t()) <= 0) throw std::invalid_argument("v2: m must be positive");
  return Valuation::finite(static_cast<long>(int_trailing_zeros(m)));
}

Valuation v2(long long m) { return v2(Int(static_cast<long>(m))); }

int digit_sum_2(const Int& m) {
  if (mpz_sgn(m.get_mpz_t()) < 0) throw std::invalid_argument("digit_sum_2: m must be nonnegative");
  return static_cast<int>(mpz_popcount(m.get_mpz_t()));
}

int digit_sum_2(long long m) { return digit_sum_2(Int(static_cast<long>(m))); }

Valuation v2_binomial(long long m, long long k) {
  if (m < 0 || k < 0 || k > m) throw std::invalid_argument("v2_binomial: need 0 <= k <= m");
  return Valuation::finite(digit_sum_2(k) + digit_sum_2(m - k) - digit_sum_2(m));
}

Int binomial(long long m, long long k) {
  if (m < 0 || k < 0 || k > m) throw std::invalid_argument("binomial: need 0 <= k <= m");
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return r;
}

}  // namespace torsionlab

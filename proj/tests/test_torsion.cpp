#include "doctest.h"
#include "torsionlab/arith.hpp"
#include "torsionlab/sublattice.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

TEST_CASE("threshold integers n0 and m0") {
  CHECK(n0_of(2) == 6);
  CHECK(n0_of(3) == 12);
  CHECK(n0_of(6) == 91);
  CHECK(n0_of(10) == 1449);
  CHECK(m0_of(2) == 0);
  CHECK(m0_of(3) == 1);
  CHECK(m0_of(7) == 3);
  CHECK(m0_of(9) == 4);
  CHECK_THROWS_AS(m0_of(1), std::invalid_argument);
}

TEST_CASE("m0 terminates for every s up to 64") {
  for (int s = 2; s <= 64; ++s) {
    int m = m0_of(s);
    CHECK(m >= 0);
    CHECK(2LL * m - tau2_spin(m + 1) > s - 3);
    if (m > 0) CHECK_FALSE(2LL * (m - 1) - tau2_spin(m) > s - 3);
  }
}

TEST_CASE("tau2 of the spin groups") {
  CHECK(tau2_spin(1) == 0);
  CHECK(tau2_spin(3) == 0);
  CHECK(tau2_spin(4) == 1);
  CHECK(tau2_spin(6) == 1);
  CHECK(tau2_spin(12) == 5);
  CHECK(tau2_spin(16) == 9);
  CHECK_THROWS_AS(tau2_spin(0), std::invalid_argument);
}

TEST_CASE("tau2_spin has the three-clause shape up to 2048") {
  for (long long n = 5; n <= 2048; ++n) {
    int s = 0;
    while ((1LL << (s + 1)) < n) ++s;
    REQUIRE(s >= 2);
    long long m0 = m0_of(s);
    Int n0 = n0_of(s);
    long long expected;
    if (n <= (1LL << s) + m0) {
      expected = n - 2 * s + 1;
    } else if (Int(static_cast<long>(n)) < n0) {
      expected = n - 2 * s;
    } else {
      expected = n - 2 * s - 1;
    }
    CHECK(tau2_spin(n) == expected);
    CHECK(tau2_spin(n) >= n - 2 * s - 1);
    CHECK(tau2_spin(n) <= n - 2 * s + 1);
  }
}

TEST_CASE("so and pgo closed forms") {
  CHECK(tau2_so(5) == 4);
  CHECK(tau2_pgo(8) == 8);
  CHECK(tau2_pgo(6) == 5);
  CHECK(tau2_pgo(1) == 1);
}

TEST_CASE("elementary bound") {
  CHECK(hspin_elementary_bound(6) == 2);
  CHECK(hspin_elementary_bound(8) == 6);
  CHECK(hspin_elementary_bound(12) == 11);
  CHECK_THROWS_AS(hspin_elementary_bound(7), std::invalid_argument);
}

TEST_CASE("hspin bounds for quoted ranks") {
  HSpinBound b14 = hspin_bounds(14);
  CHECK(b14.lower == 7);
  CHECK(b14.upper == 7);
  CHECK(b14.equality_known);

  HSpinBound b8 = hspin_bounds(8);
  CHECK(b8.lower == 3);
  CHECK(b8.upper == 6);
  CHECK_FALSE(b8.equality_known);
  CHECK(b8.case_tag == "pow2_or_3pow2_8x");

  HSpinBound b6 = hspin_bounds(6);
  CHECK(b6.lower == 1);
  CHECK(b6.upper == 2);
  CHECK_FALSE(b6.equality_known);
  CHECK(b6.case_tag == "generic_2x");

  HSpinBound b10 = hspin_bounds(10);
  CHECK(b10.lower == 4);
  CHECK(b10.upper == 5);
  CHECK(b10.case_tag == "generic_2x");

  CHECK(hspin_bounds(4).case_tag == "n4_or_n12_4x");
  CHECK(hspin_bounds(12).case_tag == "n4_or_n12_4x");
  CHECK(hspin_bounds(24).case_tag == "pow2_or_3pow2_8x");
}

TEST_CASE("hspin bounds are ordered for every even rank up to 128") {
  for (long long n = 4; n <= 128; n += 2) {
    HSpinBound b = hspin_bounds(n);
    CHECK(b.lower <= b.upper);
    CHECK(b.lower == tau2_spin(n));
    if (b.equality_known) CHECK(b.lower == b.upper);
  }
}

TEST_CASE("closed forms match the oracle at small ranks") {
  for (int n = 3; n <= 7; ++n) {
    RingContext ctx(n);
    CHECK(torsion_oracle(ctx, SubringLabel::R_tilde_spin).tau2 == tau2_spin(n));
    CHECK(torsion_oracle(ctx, SubringLabel::R_prime_so).tau2 == tau2_so(n));
    if (n <= 6) {
      CHECK(torsion_oracle(ctx, SubringLabel::R_bar_pgo).tau2 == tau2_pgo(n));
    }
  }
}

TEST_CASE("certificate bounds at small ranks") {
  {
    RingContext ctx(6);
    CertificateBound cb = certificate_bound(ctx, 2, {1, 2, 4});
    CHECK(cb.p == 2);
    CHECK(cb.verified);
    CHECK(cb.t_valuation == 2);
    REQUIRE(cb.d_variant.has_value());
    CHECK(cb.d_valuation == 2);
  }
  {
    RingContext ctx(8);
    CertificateBound cb = certificate_bound(ctx, 2, {1, 2, 4});
    CHECK(cb.p == 4);
    CHECK(cb.verified);
    CHECK_FALSE(cb.d_variant.has_value());  // m != 2^{v2(8)}
  }
  {
    RingContext ctx(8);
    CHECK_THROWS_WITH_AS(certificate_bound(ctx, 8, {1, 2, 4}),
                         doctest::Contains("m divides 2^{v2(n)} and 2 <= m <= n/2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(certificate_bound(ctx, 2, {3, 5}),
                         doctest::Contains("strongly Totaro-decomposable"),
                         std::invalid_argument);
  }
  {
    RingContext ctx(6);
    // {1,2,3,4,5} is strongly decomposable at n = 6 but leaves I empty.
    CHECK_THROWS_WITH_AS(certificate_bound(ctx, 2, {1, 2, 3, 4, 5}),
                         doctest::Contains("I contains [n-m+1, n-1]"), std::invalid_argument);
  }
}

TEST_CASE("certificate bound at rank 12 in truncated arithmetic") {
  RingContext ctx(12, 9);
  CertificateBound cb = certificate_bound(ctx, 4, {1, 2, 4, 8});
  CHECK(cb.p == 7);
  CHECK(cb.verified);
  CHECK(cb.t_valuation == 7);
  CHECK(cb.d_valuation == 7);

  RingContext coarse(12, 5);
  CHECK_THROWS_AS(certificate_bound(coarse, 4, {1, 2, 4, 8}), std::invalid_argument);
}

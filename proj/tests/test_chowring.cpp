#include <random>

#include "doctest.h"
#include "test_seed.hpp"
#include "torsionlab/arith.hpp"
#include "torsionlab/generators.hpp"

using namespace torsionlab;

namespace {

RingElement term(const RingContext& ctx, Mask eset, int tpow, long c) {
  RingElement r(ctx);
  r.add_term(eset, tpow, Int(c));
  r.normalize();
  return r;
}

RingElement random_element(const RingContext& ctx, std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<long long> masks(0, (1LL << (ctx.n() - 1)) - 1);
  std::uniform_int_distribution<int> tpows(0, ctx.n() - 1);
  std::uniform_int_distribution<long> coeffs(-9, 9);
  RingElement r(ctx);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    r.add_term(static_cast<Mask>(masks(rng)), tpows(rng), Int(coeffs(rng)));
  }
  r.normalize();
  return r;
}

}  // namespace

TEST_CASE("generators and basic relations at n = 4") {
  RingContext ctx(4);
  RingElement e1 = gen_e(ctx, 1), e2 = gen_e(ctx, 2), e3 = gen_e(ctx, 3), t = gen_t(ctx);
  CHECK(mul(e1, e1) == e2);
  CHECK(mul(e2, e2) == term(ctx, mask_bit(1) | mask_bit(3), 0, 2));
  RingElement t4 = mul(pow(t, 3), t);
  RingElement expected = term(ctx, mask_bit(1), 3, 2) + term(ctx, mask_bit(2), 2, -2) +
                         term(ctx, mask_bit(3), 1, 2);
  CHECK(t4 == expected);
  CHECK(pow(e1, 6) == term(ctx, mask_bit(1) | mask_bit(2) | mask_bit(3), 0, 2));
  CHECK(one(ctx) == term(ctx, 0, 0, 1));
  CHECK_THROWS_AS(gen_e(ctx, 4), std::invalid_argument);
  CHECK_THROWS_AS(gen_e(ctx, 0), std::invalid_argument);
}

TEST_CASE("powers of e1 and t at n = 8") {
  RingContext ctx(8);
  RingElement e15 = pow(gen_e(ctx, 1), 15);
  RingElement rhs = e_of(ctx, {1, 2, 3, 4, 5}) * Int(2);
  CHECK(valuation_hat(e15 - rhs) >= 2);  // e1^15 = 2 e([1,5]) mod 4
  CHECK(pow(gen_t(ctx), 15).is_zero());
  std::mt19937_64 rng(g_seed);
  RingElement x = random_element(ctx, rng);
  CHECK(pow(x, 1) == x);
  CHECK(pow(x, 0) == one(ctx));
}

TEST_CASE("x0 coefficients of the small certificate elements") {
  RingContext ctx4(4);
  RingElement x = mul(pow(gen_e(ctx4, 1), 6), chern_d(ctx4, 3));
  CHECK(x0_coefficient(x) == 8);
  CHECK(x0_coefficient(x0(ctx4)) == 1);
  CHECK(valuation_hat(x) == 3);
  CHECK(valuation_hat(x0(ctx4)) == 0);
  CHECK(valuation_hat(zero(ctx4)).is_infinite());
  CHECK_THROWS_AS(x0_coefficient(gen_t(ctx4)), std::invalid_argument);

  // n = 6: the d_{n-1}-only product carries 2-divisibility n - S2(C(n,2)) = 2,
  // the (2t)-variant one more.
  RingContext ctx6(6);
  Int c_plain = x0_coefficient(mul(pow(gen_e(ctx6, 1), 15), chern_d(ctx6, 5)));
  CHECK(int_trailing_zeros(c_plain) == 2);
  Int c_2t = x0_coefficient(
      mul(mul(pow(gen_e(ctx6, 1), 14), chern_d(ctx6, 5)), gen_t(ctx6) * Int(2)));
  CHECK(int_trailing_zeros(c_2t) == 3);
}

TEST_CASE("R'-coordinates and valuations") {
  RingContext ctx(6);
  RingElement d2 = chern_d(ctx, 2);
  RingElement diff = mul(d2, d2) - term(ctx, 0, 4, 15);
  CHECK(rprime_coordinates(diff).in_2k_rprime(1));

  CHECK(rprime_coordinates(c_of(ctx, {2, 4}) * gen_t(ctx)).in_rprime);
  CHECK_FALSE(rprime_coordinates(gen_e(ctx, 1)).in_rprime);
  CHECK_FALSE(rprime_coordinates(gen_e(ctx, 3)).in_rprime);

  RingElement c1_7 = pow(chern_c(ctx, 1), 7);
  CHECK(valuation_rprime(c1_7) >= 7 - digit_sum_2(7));
  CHECK(valuation_rprime(gen_t(ctx) * Int(2)) == 1);
  CHECK(valuation_rprime(chern_c(ctx, 3)) == 0);
  CHECK_THROWS_AS(valuation_rprime(gen_e(ctx, 2)), std::domain_error);
}

TEST_CASE("products of t and c generators stay in R'") {
  RingContext ctx(6);
  std::mt19937_64 rng(g_seed);
  std::uniform_int_distribution<int> pick(0, 5), len(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    RingElement x = one(ctx);
    int k = len(rng);
    for (int i = 0; i < k; ++i) {
      int g = pick(rng);
      x = (g == 0) ? mul_by_t(x) : mul(x, chern_c(ctx, g));
      if (x.is_zero()) break;
    }
    CHECK(rprime_coordinates(x).in_rprime);
  }
}

TEST_CASE("mod-2^k truncation") {
  RingContext ctx(4);
  CHECK(truncate_mod_2k(x0(ctx) * Int(8), 3).is_zero());
  std::mt19937_64 rng(g_seed);
  RingElement x = random_element(ctx, rng);
  CHECK(truncate_mod_2k(truncate_mod_2k(x, 3), 3) == truncate_mod_2k(x, 3));
  CHECK_THROWS_AS(truncate_mod_2k(x, 0), std::invalid_argument);

  RingContext ctx8(8);
  RingElement lhs = truncate_mod_2k(d_of(ctx8, {7, 6, 5}), 4);
  RingElement bracket = mul(e_of(ctx8, {1, 6, 7}) + e_of(ctx8, {2, 5, 7}) + e_of(ctx8, {3, 5, 6}),
                            pow(gen_t(ctx8), 4)) +
                        e_of(ctx8, {5, 6, 7});
  CHECK(lhs == truncate_mod_2k(bracket * Int(8), 4));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(g_seed);
  for (int n = 3; n <= 10; ++n) {
    RingContext ctx(n);
    int trials = n <= 6 ? 25 : 10;
    for (int i = 0; i < trials; ++i) {
      RingElement a = random_element(ctx, rng);
      RingElement b = random_element(ctx, rng);
      RingElement c = random_element(ctx, rng);
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));  // also reduction confluence
      CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
      CHECK(mul(a, one(ctx)) == a);
    }
  }
}

TEST_CASE("grading and top-degree principality") {
  std::mt19937_64 rng(g_seed);
  for (int n = 3; n <= 8; ++n) {
    RingContext ctx(n);
    std::uniform_int_distribution<long long> masks(0, (1LL << (n - 1)) - 1);
    std::uniform_int_distribution<int> tpows(0, n - 1);
    for (int i = 0; i < 40; ++i) {
      Monomial ma{static_cast<Mask>(masks(rng)), tpows(rng)};
      Monomial mb{static_cast<Mask>(masks(rng)), tpows(rng)};
      RingElement a = term(ctx, ma.eset, ma.tpow, 3);
      RingElement b = term(ctx, mb.eset, mb.tpow, 5);
      RingElement p = mul(a, b);
      int want = ctx.monomial_degree(ma) + ctx.monomial_degree(mb);
      if (want > ctx.dim_x()) {
        CHECK(p.is_zero());
      } else if (!p.is_zero()) {
        CHECK(p.homogeneous_degree() == want);
        if (want == ctx.dim_x()) {
          CHECK(p.terms().size() == 1);
          CHECK(p.terms().begin()->first == ctx.x0_monomial());
        }
      }
    }
  }
}

TEST_CASE("t^(2n-1) vanishes") {
  for (int n = 3; n <= 10; ++n) {
    RingContext ctx(n);
    CHECK(pow(gen_t(ctx), static_cast<unsigned long>(2 * n - 1)).is_zero());
    CHECK_FALSE(pow(gen_t(ctx), static_cast<unsigned long>(2 * n - 2)).is_zero());
  }
}

TEST_CASE("e1 power law at dimY") {
  for (int n = 4; n <= 10; ++n) {
    RingContext ctx(n);
    RingElement p = pow(gen_e(ctx, 1), static_cast<unsigned long>(ctx.dim_y()));
    REQUIRE(p.terms().size() == 1);
    const auto& [m, c] = *p.terms().begin();
    CHECK(m.eset == (Mask(1) << (n - 1)) - 1);
    CHECK(m.tpow == 0);
    long expected = n - 1 - digit_sum_2(binomial(n, 2));
    CHECK(static_cast<long>(int_trailing_zeros(c)) == expected);
  }
}

TEST_CASE("canonical serialization") {
  RingContext ctx(4);
  CHECK(to_canonical_string(zero(ctx)) == "0");
  CHECK(to_canonical_string(one(ctx)) == "1");
  RingElement x = term(ctx, mask_bit(1) | mask_bit(3), 2, -4) + term(ctx, 0, 1, 7) +
                  term(ctx, mask_bit(2), 0, 1);
  CHECK(to_canonical_string(x) == "7*t + 1*e{2} - 4*e{1,3}*t^2");
  CHECK(to_canonical_string(pow(gen_e(ctx, 1), 6)) == "2*e{1,2,3}");
}

TEST_CASE("context mismatch is rejected") {
  RingContext a(4), b(4);
  CHECK_THROWS_AS(mul(gen_t(a), gen_t(b)), std::invalid_argument);
  CHECK_THROWS_AS(gen_t(a) + gen_t(b), std::invalid_argument);
}

TEST_CASE("spill cache round trip") {
  std::string dir = "cache_test_dir";
  auto first = RingContext::with_cache(5, 0, dir);   // computes and saves
  auto second = RingContext::with_cache(5, 0, dir);  // loads
  RingContext plain(5);
  std::mt19937_64 rng(g_seed);
  for (int i = 0; i < 10; ++i) {
    RingElement a = random_element(plain, rng);
    RingElement b = random_element(plain, rng);
    RingElement want = mul(a, b);
    auto replay = [&](const RingContext& ctx) {
      RingElement x(ctx), y(ctx);
      for (const auto& [m, c] : a.terms()) x.add_term(m.eset, m.tpow, c);
      for (const auto& [m, c] : b.terms()) y.add_term(m.eset, m.tpow, c);
      x.normalize();
      y.normalize();
      RingElement got = mul(x, y);
      CHECK(to_canonical_string(got) == to_canonical_string(want));
    };
    replay(*first);
    replay(*second);
  }
}

TEST_CASE("degenerate rank n = 2") {
  RingContext ctx(2);
  CHECK(ctx.dim_x() == 2);
  CHECK(ctx.dim_y() == 1);
  CHECK(mul(gen_e(ctx, 1), gen_e(ctx, 1)).is_zero());
  CHECK(mul(gen_t(ctx), gen_t(ctx)) == term(ctx, mask_bit(1), 1, 2));
  CHECK(x0_coefficient(mul(gen_t(ctx), gen_e(ctx, 1))) == 1);
}

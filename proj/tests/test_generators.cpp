#include "doctest.h"
#include "torsionlab/sublattice.hpp"

using namespace torsionlab;

namespace {

RingElement term(const RingContext& ctx, Mask eset, int tpow, long c) {
  RingElement r(ctx);
  r.add_term(eset, tpow, Int(c));
  r.normalize();
  return r;
}

}  // namespace

TEST_CASE("c_i construction") {
  RingContext ctx4(4);
  CHECK(chern_c(ctx4, 1) == term(ctx4, mask_bit(1), 0, -2));
  CHECK(chern_c(ctx4, 4).is_zero());
  CHECK(chern_c(ctx4, 5).is_zero());
  CHECK_THROWS_AS(chern_c(ctx4, 0), std::invalid_argument);
  RingContext ctx8(8);
  CHECK(chern_c(ctx8, 4) == term(ctx8, mask_bit(4), 0, 2));
}

TEST_CASE("d_i construction") {
  RingContext ctx4(4);
  RingElement d3 = term(ctx4, 0, 3, 4) + term(ctx4, mask_bit(1), 2, -6) +
                   term(ctx4, mask_bit(2), 1, 4) + term(ctx4, mask_bit(3), 0, -2);
  CHECK(chern_d(ctx4, 3) == d3);
  CHECK_THROWS_AS(chern_d(ctx4, 4), std::invalid_argument);

  RingContext ctx6(6);
  CHECK(chern_d(ctx6, 1) == term(ctx6, 0, 1, 6) + term(ctx6, mask_bit(1), 0, -2));

  RingContext ctx8(8);
  RingElement d7_mod4 = (mul(gen_e(ctx8, 1), pow(gen_t(ctx8), 6)) +
                         mul(gen_e(ctx8, 3), pow(gen_t(ctx8), 4)) +
                         mul(gen_e(ctx8, 5), pow(gen_t(ctx8), 2)) + gen_e(ctx8, 7)) *
                        Int(2);
  CHECK(valuation_hat(chern_d(ctx8, 7) - d7_mod4) >= 2);
}

TEST_CASE("the two closed forms of d_i agree") {
  for (int n = 3; n <= 10; ++n) {
    RingContext ctx(n);
    for (int i = 1; i <= n - 1; ++i) {
      CHECK(chern_d(ctx, i) == chern_d_eform(ctx, i));
    }
  }
}

TEST_CASE("index-set products") {
  RingContext ctx6(6);
  RingElement c15 = c_of(ctx6, {1, 2, 3, 4, 5});
  RingElement e15 = e_of(ctx6, {1, 2, 3, 4, 5});
  bool plus = c15 == e15 * Int(32);
  bool minus = c15 == e15 * Int(-32);
  CHECK((plus || minus));  // c([1,n-1]) = +-2^{n-1} e([1,n-1])
  CHECK(e_of(ctx6, {}) == one(ctx6));
  CHECK_THROWS_AS(e_of(ctx6, {6}), std::invalid_argument);

  RingContext ctx8(8);
  RingElement bracket =
      mul(e_of(ctx8, {1, 6, 7}) + e_of(ctx8, {2, 5, 7}) + e_of(ctx8, {3, 5, 6}),
          pow(gen_t(ctx8), 4)) +
      e_of(ctx8, {5, 6, 7});
  CHECK(truncate_mod_2k(d_of(ctx8, {5, 6, 7}), 4) == truncate_mod_2k(bracket * Int(8), 4));
}

TEST_CASE("x0 and the named generator sets") {
  RingContext ctx(4);
  CHECK(x0(ctx) == term(ctx, mask_bit(1) | mask_bit(2) | mask_bit(3), 3, 1));

  GeneratorSet r = generator_set(ctx, SubringLabel::R_hspin);
  REQUIRE(r.gens.size() == 5);
  CHECK(r.gens[0].name == "2t");
  CHECK(r.gens[1].name == "d1");
  CHECK(r.gens[3].name == "d3");
  CHECK(r.gens[4].name == "e1");

  GeneratorSet rp = generator_set(ctx, SubringLabel::R_prime_so);
  REQUIRE(rp.gens.size() == 4);
  CHECK(rp.gens[0].name == "t");
  CHECK(rp.gens[1].name == "2e1");
  CHECK(rp.gens[3].name == "2e3");
  for (const auto& g : rp.gens) CHECK(g.element.homogeneous_degree() == g.degree);

  CHECK_THROWS_AS(generator_set(ctx, SubringLabel::custom), std::invalid_argument);
  CHECK(label_from_name("R_bar_pgo") == SubringLabel::R_bar_pgo);
  CHECK_THROWS_AS(label_from_name("nope"), std::invalid_argument);
}

TEST_CASE("alternating d-relation for even n") {
  for (int n = 4; n <= 10; n += 2) {
    RingContext ctx(n);
    RingElement acc = pow(gen_t(ctx), static_cast<unsigned long>(n));
    for (int i = 1; i <= n - 1; ++i) {
      RingElement piece = mul(chern_d(ctx, i), pow(gen_t(ctx), static_cast<unsigned long>(n - i)));
      acc = (i % 2 == 1) ? acc - piece : acc + piece;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("generators of R and R' lie in the spin subring lattice") {
  for (int n : {4, 6}) {
    RingContext ctx(n);
    GeneratorSet spin = generator_set(ctx, SubringLabel::R_tilde_spin);
    for (SubringLabel label : {SubringLabel::R_hspin, SubringLabel::R_prime_so}) {
      for (const auto& g : generator_set(ctx, label).gens) {
        DegreeLattice lat = degree_lattice(ctx, spin, g.degree);
        CHECK(contains(lat, g.element));
      }
    }
  }
}

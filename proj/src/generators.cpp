#include "torsionlab/generators.hpp"

#include <stdexcept>

#include "torsionlab/arith.hpp"

namespace torsionlab {

RingElement chern_c(const RingContext& ctx, int i) {
  if (i <= 0) throw std::invalid_argument("chern_c: index must be positive");
  if (i >= ctx.n()) return zero(ctx);
  RingElement r(ctx);
  r.add_term(mask_bit(i), 0, (i % 2 == 0) ? 2 : -2);
  r.normalize();
  return r;
}

RingElement chern_d(const RingContext& ctx, int i) {
  const int n = ctx.n();
  if (i < 1 || i > n - 1) throw std::invalid_argument("chern_d: index outside [1, n-1]");
  RingElement r(ctx);
  // j = 0 term is C(n,i) t^i with c_0 = 1.
  r.add_term(0, i, binomial(n, i));
  for (int j = 1; j <= i; ++j) {
    Int coeff = binomial(n - j, i - j) * ((j % 2 == 0) ? 2 : -2);
    r.add_term(mask_bit(j), i - j, coeff);
  }
  r.normalize();
  return r;
}

RingElement chern_d_eform(const RingContext& ctx, int i) {
  const int n = ctx.n();
  if (i < 1 || i > n - 1) throw std::invalid_argument("chern_d_eform: index outside [1, n-1]");
  RingElement r(ctx);
  r.add_term(0, i, binomial(n, i));
  for (int k = 0; k <= i - 1; ++k) {
    Int coeff = binomial(n + k - i, k) * (((i - k) % 2 == 0) ? 2 : -2);
    r.add_term(mask_bit(i - k), k, coeff);
  }
  r.normalize();
  return r;
}

namespace {
void check_index_set(const RingContext& ctx, const std::vector<int>& I, const char* who) {
  for (int i : I) {
    if (i < 1 || i > ctx.n() - 1) {
      throw std::invalid_argument(std::string(who) + ": index outside [1, n-1]");
    }
  }
}
}  // namespace

RingElement e_of(const RingContext& ctx, const std::vector<int>& I) {
  check_index_set(ctx, I, "e_of");
  RingElement r = one(ctx);
  for (int i : I) r = mul_by_e(r, i);
  return r;
}

RingElement c_of(const RingContext& ctx, const std::vector<int>& I) {
  check_index_set(ctx, I, "c_of");
  RingElement r = one(ctx);
  for (int i : I) r = mul(r, chern_c(ctx, i));
  return r;
}

RingElement d_of(const RingContext& ctx, const std::vector<int>& I) {
  check_index_set(ctx, I, "d_of");
  RingElement r = one(ctx);
  for (int i : I) r = mul(r, chern_d(ctx, i));
  return r;
}

RingElement x0(const RingContext& ctx) {
  RingElement r(ctx);
  r.add_term((Mask(1) << (ctx.n() - 1)) - 1, ctx.n() - 1, 1);
  r.normalize();
  return r;
}

std::string label_name(SubringLabel label) {
  switch (label) {
    case SubringLabel::R_hspin: return "R_hspin";
    case SubringLabel::R_tilde_spin: return "R_tilde_spin";
    case SubringLabel::R_prime_so: return "R_prime_so";
    case SubringLabel::R_bar_pgo: return "R_bar_pgo";
    case SubringLabel::custom: return "custom";
  }
  return "custom";
}

SubringLabel label_from_name(const std::string& name) {
  if (name == "R_hspin") return SubringLabel::R_hspin;
  if (name == "R_tilde_spin") return SubringLabel::R_tilde_spin;
  if (name == "R_prime_so") return SubringLabel::R_prime_so;
  if (name == "R_bar_pgo") return SubringLabel::R_bar_pgo;
  if (name == "custom") return SubringLabel::custom;
  throw std::invalid_argument("unknown subring label: " + name);
}

GeneratorSet generator_set(const RingContext& ctx, SubringLabel label) {
  const int n = ctx.n();
  GeneratorSet out;
  out.label = label;
  RingElement two_t = gen_t(ctx) * Int(2);
  auto add = [&out](std::string name, RingElement el, int degree) {
    out.gens.push_back(Generator{std::move(name), std::move(el), degree});
  };
  switch (label) {
    case SubringLabel::R_hspin:
      add("2t", two_t, 1);
      for (int i = 1; i <= n - 1; ++i) add("d" + std::to_string(i), chern_d(ctx, i), i);
      add("e1", gen_e(ctx, 1), 1);
      break;
    case SubringLabel::R_tilde_spin:
      add("t", gen_t(ctx), 1);
      for (int i = 1; i <= n - 1; ++i) {
        add("2e" + std::to_string(i), gen_e(ctx, i) * Int(2), i);
      }
      add("e1", gen_e(ctx, 1), 1);
      break;
    case SubringLabel::R_prime_so:
      add("t", gen_t(ctx), 1);
      for (int i = 1; i <= n - 1; ++i) {
        add("2e" + std::to_string(i), gen_e(ctx, i) * Int(2), i);
      }
      break;
    case SubringLabel::R_bar_pgo:
      add("2t", two_t, 1);
      for (int i = 1; i <= n - 1; ++i) add("d" + std::to_string(i), chern_d(ctx, i), i);
      break;
    case SubringLabel::custom:
      throw std::invalid_argument("generator_set: use custom_generator_set for custom sets");
  }
  for (const auto& g : out.gens) {
    int d = g.element.homogeneous_degree();
    if (d != g.degree) throw std::logic_error("generator_set: generator degree mismatch");
  }
  return out;
}

GeneratorSet custom_generator_set(std::vector<Generator> gens) {
  GeneratorSet out;
  out.label = SubringLabel::custom;
  for (auto& g : gens) {
    int d = g.element.homogeneous_degree();
    if (d < 0 || d != g.degree) {
      throw std::invalid_argument("custom_generator_set: generators must be homogeneous");
    }
  }
  out.gens = std::move(gens);
  return out;
}

}  // namespace torsionlab

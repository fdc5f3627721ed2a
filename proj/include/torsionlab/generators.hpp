#pragma once

#include <string>
#include <vector>

#include "torsionlab/chowring.hpp"

namespace torsionlab {

// c_i = (-1)^i 2 e_i for 1 <= i <= n-1; zero for i >= n.
RingElement chern_c(const RingContext& ctx, int i);

// d_i = C(n,i) t^i + C(n-1,i-1) t^{i-1} c_1 + ... + C(n-i,0) c_i,
// the i-th Chern class of E tensor L. Defined for 1 <= i <= n-1.
RingElement chern_d(const RingContext& ctx, int i);

// Independent closed form of d_i over the e-basis:
// C(n,i) t^i + 2 sum_{k=0}^{i-1} C(n+k-i,k) (-1)^{i-k} t^k e_{i-k}.
// Kept as a test oracle for chern_d, not used by the constructors.
RingElement chern_d_eform(const RingContext& ctx, int i);

// Products over an index set I, each index in [1, n-1]; empty I gives 1.
RingElement e_of(const RingContext& ctx, const std::vector<int>& I);
RingElement c_of(const RingContext& ctx, const std::vector<int>& I);
RingElement d_of(const RingContext& ctx, const std::vector<int>& I);

// x0 = t^{n-1} e_1 e_2 ... e_{n-1}.
RingElement x0(const RingContext& ctx);

enum class SubringLabel { R_hspin, R_tilde_spin, R_prime_so, R_bar_pgo, custom };

std::string label_name(SubringLabel label);
SubringLabel label_from_name(const std::string& name);

struct Generator {
  std::string name;
  RingElement element;
  int degree;
};

struct GeneratorSet {
  SubringLabel label;
  std::vector<Generator> gens;
};

// The four distinguished subrings:
//   R  (hspin) = <2t, d_i, e_1>     R~ (spin) = <t, 2e_i, e_1>
//   R' (so)    = <t, 2e_i>          R- (pgo)  = <2t, d_i>
GeneratorSet generator_set(const RingContext& ctx, SubringLabel label);

GeneratorSet custom_generator_set(std::vector<Generator> gens);

}  // namespace torsionlab

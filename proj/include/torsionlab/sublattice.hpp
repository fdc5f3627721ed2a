#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/generators.hpp"

namespace torsionlab {

// Exponent vector over a generator set, in enumeration order (generators
// sorted by descending degree, ties kept in listed order).
struct MonomialExponent {
  std::vector<std::pair<std::string, int>> exponents;  // nonzero entries only
  int degree = 0;
};

// Yields every product of generators of total degree exactly `degree`,
// together with its reduced ring element. Prunes subtrees whose partial
// product is zero, and caps exponents where a ring identity forces zero:
// t-exponent <= 2n-2 (t^{2n-1} = 0) and e_1-exponent <= dimY.
// Return false from the visitor to stop early.
void enumerate_monomials(
    const GeneratorSet& gens, int degree,
    const std::function<bool(const MonomialExponent&, const RingElement&)>& visit);

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced to [0, pivot), zero rows dropped. Deterministic.
void hermite_normal_form(std::vector<std::vector<Int>>& rows);

struct DegreeLattice {
  int degree = 0;
  std::vector<Monomial> basis;          // degree-d basis monomials, ascending
  std::vector<std::vector<Int>> rows;   // HNF basis of the span
};

// The degree-d component of the subring generated by `gens`, as an integer
// lattice over the degree-d basis monomials of the ring.
DegreeLattice degree_lattice(const RingContext& ctx, const GeneratorSet& gens, int degree);

// Exact membership by back-substitution against the Hermite form.
bool contains(const DegreeLattice& lattice, const RingElement& a);

struct TorsionReport {
  std::string family;  // spin | so | pgo | hspin | <subring label>
  long long n = 0;
  std::string method;  // "oracle" | "closed-form" | "elementary" | "certificate"
  Int tau = 0;
  long long tau2 = 0;
  Int odd_part = 1;
  bool odd_part_verified = false;
  unsigned long long monomials_considered = 0;
  long elapsed_ms = 0;
  bool truncated = false;
  int trunc_bits = 0;
  std::vector<std::string> provenance;
};

struct OracleOptions {
  bool parallel = true;
  // In a truncated context, recompute every (stride)-th leaf exactly; the
  // subsample gcd is a multiple of the true gcd, so subsample gcd == 2^tau2
  // pins the full gcd exactly.
  unsigned subsample_stride = 100;
};

// Enumerates all top-degree (dimX) monomials of the subring, takes the gcd of
// their x0-coefficients, and reports tau = |gcd|. A nontrivial odd part (or a
// truncated run whose subsample cannot certify odd part 1) is an error, never
// absorbed. Requires n >= 3, and even n for R_hspin.
TorsionReport torsion_oracle(const RingContext& ctx, SubringLabel label,
                             const OracleOptions& opts = {});

// Serial reference and OpenMP kernel for the oracle reduction; both produce
// bit-identical reports (modulo elapsed_ms). The oracle dispatches on
// opts.parallel; these are exposed for tests and the benchmark.
TorsionReport torsion_oracle_serial(const RingContext& ctx, SubringLabel label,
                                    const OracleOptions& opts = {});
TorsionReport torsion_oracle_parallel(const RingContext& ctx, SubringLabel label,
                                      const OracleOptions& opts = {});

// gcd of x0-coefficients over all top-degree monomials of an arbitrary
// generator set (no group semantics attached); used for cross-checks.
Int top_degree_gcd(const RingContext& ctx, const GeneratorSet& gens, bool parallel);

}  // namespace torsionlab

#include "torsionlab/sublattice.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <stdexcept>

namespace torsionlab {

namespace {

struct EnumPlan {
  std::vector<const Generator*> order;  // descending degree, stable on ties
  std::vector<long> caps;               // -1 = uncapped
};

EnumPlan make_plan(const RingContext& ctx, const GeneratorSet& gens) {
  EnumPlan plan;
  for (const auto& g : gens.gens) plan.order.push_back(&g);
  std::stable_sort(plan.order.begin(), plan.order.end(),
                   [](const Generator* a, const Generator* b) { return a->degree > b->degree; });
  plan.caps.reserve(plan.order.size());
  for (const Generator* g : plan.order) {
    long cap = -1;
    const auto& terms = g->element.terms();
    if (terms.size() == 1) {
      const Monomial& m = terms.begin()->first;
      // c*t: t^{2n-1} = 0.  c*e_1: e_1^{dimY + 1} = 0 (degree above dimY).
      if (m.eset == 0 && m.tpow == 1) cap = 2 * ctx.n() - 2;
      if (m.eset == mask_bit(1) && m.tpow == 0) cap = ctx.dim_y();
    }
    plan.caps.push_back(cap);
  }
  return plan;
}

using LeafFn = std::function<bool(const std::vector<int>&, const RingElement&)>;

// Depth-first walk over exponent vectors of total degree exactly `rem` at the
// root; prefix products are reused and zero prefixes prune their subtree.
bool dfs(const EnumPlan& plan, std::size_t pos, int rem, const RingElement& cur,
         std::vector<int>& exps, const LeafFn& leaf) {
  if (pos == plan.order.size()) {
    if (rem == 0) return leaf(exps, cur);
    return true;
  }
  const Generator& g = *plan.order[pos];
  RingElement elem = cur;
  int e = 0;
  for (;;) {
    exps[pos] = e;
    if (!dfs(plan, pos + 1, rem - e * g.degree, elem, exps, leaf)) {
      exps[pos] = 0;
      return false;
    }
    if (static_cast<long>(e + 1) * g.degree > rem) break;
    if (plan.caps[pos] >= 0 && e + 1 > plan.caps[pos]) break;
    elem = mul(elem, g.element);
    if (elem.is_zero()) break;
    ++e;
  }
  exps[pos] = 0;
  return true;
}

struct WorkItem {
  std::vector<int> exps;
  RingElement prefix;
  int rem;
};

// Expand the first `depth` exponent positions into independent work items.
std::vector<WorkItem> frontier(const EnumPlan& plan, std::size_t depth, int degree,
                               const RingElement& unit) {
  std::vector<WorkItem> items;
  std::vector<int> exps(plan.order.size(), 0);
  struct Rec {
    const EnumPlan& plan;
    std::size_t depth;
    std::vector<WorkItem>& items;
    std::vector<int>& exps;
    void go(std::size_t pos, int rem, const RingElement& cur) {
      if (pos == depth) {
        items.push_back(WorkItem{exps, cur, rem});
        return;
      }
      const Generator& g = *plan.order[pos];
      RingElement elem = cur;
      int e = 0;
      for (;;) {
        exps[pos] = e;
        go(pos + 1, rem - e * g.degree, elem);
        if (static_cast<long>(e + 1) * g.degree > rem) break;
        if (plan.caps[pos] >= 0 && e + 1 > plan.caps[pos]) break;
        elem = mul(elem, g.element);
        if (elem.is_zero()) break;
        ++e;
      }
      exps[pos] = 0;
    }
  } rec{plan, depth, items, exps};
  rec.go(0, degree, unit);
  return items;
}

std::uint64_t fnv1a_exps(const std::vector<int>& exps) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int e : exps) {
    for (int b = 0; b < 4; ++b) {
      h ^= static_cast<std::uint64_t>((e >> (8 * b)) & 0xff);
      h *= 1099511628211ULL;
    }
  }
  return h;
}

// Exponent vectors achieving the running minimum residue valuation; keeps the
// lexicographically smallest kCap of them, so the merged content is the same
// for any scan order.
struct MinReservoir {
  static constexpr std::size_t kCap = 64;
  long v2 = LONG_MAX;
  std::vector<std::vector<int>> exps;

  void insert(const std::vector<int>& e) {
    auto it = std::lower_bound(exps.begin(), exps.end(), e);
    if (it != exps.end() && *it == e) return;
    exps.insert(it, e);
    if (exps.size() > kCap) exps.pop_back();
  }
  void offer(long v, const std::vector<int>& e) {
    if (v < v2) {
      v2 = v;
      exps.clear();
    }
    if (v == v2) insert(e);
  }
  void merge(const MinReservoir& o) {
    if (o.v2 < v2) {
      v2 = o.v2;
      exps = o.exps;
    } else if (o.v2 == v2) {
      for (const auto& e : o.exps) insert(e);
    }
  }
};

// Associative, commutative reduction state for the top-degree scan; combining
// per-thread copies in any order gives the same result as the serial walk.
struct OracleAccum {
  Int gcd = 0;
  MinReservoir reservoir;
  Int sample_gcd = 0;
  unsigned long long leaves = 0;
  unsigned long long samples = 0;

  void merge(const OracleAccum& o) {
    gcd = int_gcd(gcd, o.gcd);
    reservoir.merge(o.reservoir);
    sample_gcd = int_gcd(sample_gcd, o.sample_gcd);
    leaves += o.leaves;
    samples += o.samples;
  }
};

struct OracleJob {
  const RingContext* ctx;
  const EnumPlan* plan;
  // Exact twin for subsample recomputation when ctx is truncated.
  const RingContext* exact_ctx = nullptr;
  const EnumPlan* exact_plan = nullptr;
  unsigned stride = 100;

  Int recompute_exact(const std::vector<int>& exps) const {
    RingElement exact = one(*exact_ctx);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) {
        exact =
            mul(exact, pow(exact_plan->order[i]->element, static_cast<unsigned long>(exps[i])));
      }
    }
    return x0_coefficient(exact);
  }

  void leaf(const std::vector<int>& exps, const RingElement& elem, OracleAccum& acc) const {
    ++acc.leaves;
    Int c = x0_coefficient(elem);
    if (!ctx->truncated()) {
      acc.gcd = int_gcd(acc.gcd, c);
      return;
    }
    if (!int_is_zero(c)) {
      acc.reservoir.offer(static_cast<long>(int_trailing_zeros(c)), exps);
    }
    if (stride > 0 && fnv1a_exps(exps) % stride == 0) {
      acc.sample_gcd = int_gcd(acc.sample_gcd, recompute_exact(exps));
      ++acc.samples;
    }
  }
};

OracleAccum reduce_serial(const OracleJob& job, int degree) {
  OracleAccum acc;
  std::vector<int> exps(job.plan->order.size(), 0);
  dfs(*job.plan, 0, degree, one(*job.ctx), exps,
      [&](const std::vector<int>& e, const RingElement& el) {
        job.leaf(e, el, acc);
        return true;
      });
  return acc;
}

OracleAccum reduce_parallel(const OracleJob& job, int degree) {
  const std::size_t depth = std::min<std::size_t>(3, job.plan->order.size() - 1);
  if (depth == 0) return reduce_serial(job, degree);
  std::vector<WorkItem> items = frontier(*job.plan, depth, degree, one(*job.ctx));
  std::vector<OracleAccum> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < items.size(); ++i) {
    OracleAccum& acc = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<int> exps = items[i].exps;
    dfs(*job.plan, depth, items[i].rem, items[i].prefix, exps,
        [&](const std::vector<int>& e, const RingElement& el) {
          job.leaf(e, el, acc);
          return true;
        });
  }
  OracleAccum total;
  for (const auto& acc : per_thread) total.merge(acc);
  return total;
}

std::string family_of(SubringLabel label) {
  switch (label) {
    case SubringLabel::R_hspin: return "hspin";
    case SubringLabel::R_tilde_spin: return "spin";
    case SubringLabel::R_prime_so: return "so";
    case SubringLabel::R_bar_pgo: return "pgo";
    case SubringLabel::custom: return "custom";
  }
  return "custom";
}

TorsionReport run_oracle(const RingContext& ctx, SubringLabel label, const OracleOptions& opts,
                         bool parallel) {
  if (ctx.n() < 3) throw std::invalid_argument("torsion_oracle: n must be >= 3");
  if (label == SubringLabel::R_hspin && ctx.n() % 2 != 0) {
    throw std::invalid_argument("torsion_oracle: R_hspin requires even n");
  }
  auto t0 = std::chrono::steady_clock::now();

  GeneratorSet gens = generator_set(ctx, label);
  EnumPlan plan = make_plan(ctx, gens);

  std::unique_ptr<RingContext> exact_ctx;
  std::optional<GeneratorSet> exact_gens;
  EnumPlan exact_plan;
  OracleJob job{&ctx, &plan};
  if (ctx.truncated()) {
    exact_ctx = std::make_unique<RingContext>(ctx.n());
    exact_gens = generator_set(*exact_ctx, label);
    exact_plan = make_plan(*exact_ctx, *exact_gens);
    job.exact_ctx = exact_ctx.get();
    job.exact_plan = &exact_plan;
    job.stride = opts.subsample_stride;
  }

  OracleAccum acc = parallel ? reduce_parallel(job, ctx.dim_x()) : reduce_serial(job, ctx.dim_x());

  TorsionReport report;
  report.family = family_of(label);
  report.n = ctx.n();
  report.method = "oracle";
  report.monomials_considered = acc.leaves;
  report.truncated = ctx.truncated();
  report.trunc_bits = ctx.trunc_bits();
  report.provenance.push_back("top-degree x0-coefficient gcd over " + label_name(label));

  if (!ctx.truncated()) {
    if (int_is_zero(acc.gcd)) {
      throw std::runtime_error("torsion_oracle: top-degree span is zero");
    }
    report.tau = abs(acc.gcd);
    report.tau2 = static_cast<long long>(int_trailing_zeros(report.tau));
    report.odd_part = int_odd_part(report.tau);
    report.odd_part_verified = true;
    if (report.odd_part != 1) {
      throw std::runtime_error("torsion_oracle: odd part of the top-degree gcd is " +
                               int_str(report.odd_part) + " (expected 1); tau = " +
                               int_str(report.tau));
    }
  } else {
    if (acc.reservoir.v2 == LONG_MAX) {
      throw std::runtime_error(
          "torsion_oracle: every residue vanished mod 2^" + std::to_string(ctx.trunc_bits()) +
          "; truncation too coarse to read tau2");
    }
    report.tau2 = acc.reservoir.v2;
    report.tau = int_pow2(static_cast<unsigned long>(acc.reservoir.v2));
    report.odd_part = 1;
    // Exactly recompute the reservoir leaves (those achieving the minimum
    // residue valuation) and fold in the hash-stride samples. The resulting
    // gcd is over a subset of leaves, hence a multiple of the true gcd; if it
    // equals 2^tau2 the true gcd is pinned to exactly 2^tau2.
    Int exact_gcd = acc.sample_gcd;
    for (const auto& exps : acc.reservoir.exps) {
      exact_gcd = int_gcd(exact_gcd, job.recompute_exact(exps));
    }
    bool certified = !int_is_zero(exact_gcd) &&
                     static_cast<long>(int_trailing_zeros(exact_gcd)) == acc.reservoir.v2 &&
                     int_odd_part(exact_gcd) == 1;
    report.odd_part_verified = certified;
    if (!certified) {
      throw std::runtime_error(
          "torsion_oracle: truncated run could not certify odd part 1 via the exact subsample "
          "(reservoir=" + std::to_string(acc.reservoir.exps.size()) +
          ", samples=" + std::to_string(acc.samples) + ", gcd=" + int_str(exact_gcd) + ")");
    }
    report.provenance.push_back(
        "truncated mod 2^" + std::to_string(ctx.trunc_bits()) + "; exact recheck of " +
        std::to_string(acc.reservoir.exps.size()) + " minimum-valuation leaves plus " +
        std::to_string(acc.samples) + " stride-" + std::to_string(job.stride) + " samples");
  }
  auto t1 = std::chrono::steady_clock::now();
  report.elapsed_ms =
      static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  return report;
}

}  // namespace

void enumerate_monomials(
    const GeneratorSet& gens, int degree,
    const std::function<bool(const MonomialExponent&, const RingElement&)>& visit) {
  if (degree < 0) throw std::invalid_argument("enumerate_monomials: degree must be >= 0");
  if (gens.gens.empty()) throw std::invalid_argument("enumerate_monomials: empty generator set");
  const RingContext& ctx = gens.gens.front().element.context();
  EnumPlan plan = make_plan(ctx, gens);
  std::vector<int> exps(plan.order.size(), 0);
  dfs(plan, 0, degree, one(ctx), exps,
      [&](const std::vector<int>& e, const RingElement& el) {
        MonomialExponent me;
        me.degree = degree;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] > 0) me.exponents.emplace_back(plan.order[i]->name, e[i]);
        }
        return visit(me, el);
      });
}

// Division-based elimination with smallest-pivot selection. Combining rows
// through extended-gcd multipliers compounds entry sizes across columns;
// repeated floor-division passes keep the intermediate entries tame.
void hermite_normal_form(std::vector<std::vector<Int>>& rows) {
  auto drop_zero_rows = [&rows]() {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<Int>& r) {
                                return std::all_of(r.begin(), r.end(), [](const Int& c) {
                                  return int_is_zero(c);
                                });
                              }),
               rows.end());
  };
  drop_zero_rows();
  if (rows.empty()) return;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (int_is_zero(rows[i][c])) continue;
        if (best == rows.size() || int_cmpabs(rows[i][c], rows[best][c]) < 0) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool eliminated = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (int_is_zero(rows[i][c])) continue;
        Int q = int_fdiv_q(rows[i][c], rows[r][c]);
        if (!int_is_zero(q)) {
          for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        if (!int_is_zero(rows[i][c])) eliminated = false;
      }
      if (eliminated) {
        if (sgn(rows[r][c]) < 0) {
          for (auto& x : rows[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
          if (int_is_zero(rows[i][c])) continue;
          Int q = int_fdiv_q(rows[i][c], rows[r][c]);
          if (int_is_zero(q)) continue;
          for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  drop_zero_rows();
}

DegreeLattice degree_lattice(const RingContext& ctx, const GeneratorSet& gens, int degree) {
  if (degree < 0 || degree > ctx.dim_x()) {
    throw std::invalid_argument("degree_lattice: degree outside [0, dimX]");
  }
  if (ctx.truncated()) {
    throw std::invalid_argument("degree_lattice: requires an exact context");
  }
  DegreeLattice lat;
  lat.degree = degree;
  for (Mask m = 0; m < (Mask(1) << (ctx.n() - 1)); ++m) {
    int ed = mask_degree(m);
    if (ed <= degree && degree - ed <= ctx.n() - 1) {
      lat.basis.push_back(Monomial{m, degree - ed});
    }
  }
  std::sort(lat.basis.begin(), lat.basis.end());

  const std::size_t cols = lat.basis.size();
  // Compact periodically so the working set stays near `cols` rows.
  enumerate_monomials(gens, degree, [&](const MonomialExponent&, const RingElement& el) {
    std::vector<Int> row(cols, Int(0));
    for (const auto& [m, c] : el.terms()) {
      auto it = std::lower_bound(lat.basis.begin(), lat.basis.end(), m);
      row[static_cast<std::size_t>(it - lat.basis.begin())] = c;
    }
    lat.rows.push_back(std::move(row));
    if (lat.rows.size() > 2 * cols + 16) hermite_normal_form(lat.rows);
    return true;
  });
  hermite_normal_form(lat.rows);
  return lat;
}

bool contains(const DegreeLattice& lattice, const RingElement& a) {
  if (a.is_zero()) return true;
  int d = a.homogeneous_degree();
  if (d != lattice.degree) {
    throw std::invalid_argument("contains: element degree does not match lattice degree");
  }
  std::vector<Int> v(lattice.basis.size(), Int(0));
  for (const auto& [m, c] : a.terms()) {
    auto it = std::lower_bound(lattice.basis.begin(), lattice.basis.end(), m);
    v[static_cast<std::size_t>(it - lattice.basis.begin())] = c;
  }
  for (const auto& row : lattice.rows) {
    std::size_t p = 0;
    while (p < row.size() && int_is_zero(row[p])) ++p;
    if (p == row.size()) continue;
    if (int_is_zero(v[p])) continue;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
    if (!int_is_zero(rem)) return false;
    for (std::size_t j = p; j < row.size(); ++j) v[j] -= q * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const Int& c) { return int_is_zero(c); });
}

TorsionReport torsion_oracle(const RingContext& ctx, SubringLabel label,
                             const OracleOptions& opts) {
  return run_oracle(ctx, label, opts, opts.parallel);
}

TorsionReport torsion_oracle_serial(const RingContext& ctx, SubringLabel label,
                                    const OracleOptions& opts) {
  return run_oracle(ctx, label, opts, false);
}

TorsionReport torsion_oracle_parallel(const RingContext& ctx, SubringLabel label,
                                      const OracleOptions& opts) {
  return run_oracle(ctx, label, opts, true);
}

Int top_degree_gcd(const RingContext& ctx, const GeneratorSet& gens, bool parallel) {
  if (ctx.truncated()) throw std::invalid_argument("top_degree_gcd: requires an exact context");
  EnumPlan plan = make_plan(ctx, gens);
  OracleJob job{&ctx, &plan};
  OracleAccum acc = parallel ? reduce_parallel(job, ctx.dim_x()) : reduce_serial(job, ctx.dim_x());
  return abs(acc.gcd);
}

}  // namespace torsionlab

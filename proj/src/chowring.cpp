#include "torsionlab/chowring.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace torsionlab {

namespace {
// Full e_i * e(I) tables are precomputed up to this rank; above it entries
// are built on demand under a mutex.
constexpr int kPrecomputeMaxN = 12;
}  // namespace

RingContext::RingContext(int n, int trunc_bits, DeferInit) : n_(n), trunc_bits_(trunc_bits) {
  if (n < 2) throw std::invalid_argument("RingContext: n must be >= 2");
  if (trunc_bits < 0) throw std::invalid_argument("RingContext: trunc_bits must be >= 0");
  dimx_ = (n - 1) * (n + 2) / 2;
  dimy_ = n * (n - 1) / 2;
  etable_.resize(static_cast<std::size_t>(n_ - 1) << (n_ - 1));
}

RingContext::RingContext(int n, int trunc_bits) : RingContext(n, trunc_bits, DeferInit{}) {
  if (n_ <= kPrecomputeMaxN) {
    precompute_all();
    precomputed_ = true;
  }
}

std::shared_ptr<RingContext> RingContext::with_cache(int n, int trunc_bits,
                                                     const std::string& cache_dir) {
  if (cache_dir.empty() || n > kPrecomputeMaxN) {
    return std::make_shared<RingContext>(n, trunc_bits);
  }
  std::filesystem::path path = std::filesystem::path(cache_dir) /
                               ("etable_n" + std::to_string(n) + ".cache");
  auto ctx = std::shared_ptr<RingContext>(new RingContext(n, trunc_bits, DeferInit{}));
  if (ctx->load_e_table(path.string())) return ctx;
  ctx->precompute_all();
  ctx->precomputed_ = true;
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (!ec) ctx->save_e_table(path.string());
  return ctx;
}

void RingContext::precompute_all() {
  for (int i = 1; i <= n_ - 1; ++i) {
    for (Mask m = 0; m < (Mask(1) << (n_ - 1)); ++m) {
      e_times_locked(i, m);
    }
  }
}

const ETerms& RingContext::e_times(int i, Mask mask) const {
  if (precomputed_) {
    return *etable_[(static_cast<std::size_t>(i - 1) << (n_ - 1)) | mask];
  }
  std::lock_guard<std::mutex> lock(etable_mutex_);
  return e_times_locked(i, mask);
}

const ETerms& RingContext::e_times_locked(int i, Mask mask) const {
  auto& slot = etable_[(static_cast<std::size_t>(i - 1) << (n_ - 1)) | mask];
  if (!slot) slot = std::make_unique<ETerms>(build_e_times(i, mask));
  return *slot;
}

// e_i * e(mask), reduced to square-free form using
//   e_i^2 = sum_{k=1}^{i-1} (-1)^{k+1} 2 e_{i-k} e_{i+k} + (-1)^{i+1} e_{2i},
// with e_m = 0 for m >= n. The rewriting terminates: resolving a square
// replaces the index pair {i,i} by {i-k, i+k}, which preserves the total
// degree and strictly increases the sum of squared indices, and that sum is
// bounded among index multisets of a fixed degree.
ETerms RingContext::build_e_times(int i, Mask mask) const {
  ETerms out;
  if (i >= n_) return out;
  if (!(mask & mask_bit(i))) {
    out.emplace_back(mask | mask_bit(i), Int(1));
    return out;
  }
  Mask m0 = mask & ~mask_bit(i);
  std::map<Mask, Int> acc;
  for (int k = 1; k <= i - 1; ++k) {
    if (i + k >= n_) continue;
    Int outer_sign = (k % 2 == 1) ? 2 : -2;
    for (const auto& [m1, c1] : e_times_locked(i + k, m0)) {
      for (const auto& [m2, c2] : e_times_locked(i - k, m1)) {
        acc[m2] += outer_sign * c1 * c2;
      }
    }
  }
  if (2 * i < n_) {
    Int s = (i % 2 == 1) ? 1 : -1;
    for (const auto& [m2, c2] : e_times_locked(2 * i, m0)) {
      acc[m2] += s * c2;
    }
  }
  for (auto& [m, c] : acc) {
    if (!int_is_zero(c)) out.emplace_back(m, std::move(c));
  }
  return out;
}

bool RingContext::load_e_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string header;
  if (!std::getline(in, header) || header != "torsionlab-etable n=" + std::to_string(n_)) {
    return false;
  }
  std::string line;
  std::vector<std::unique_ptr<ETerms>> table(etable_.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    int i;
    unsigned long long mask;
    std::size_t count;
    if (!(ss >> i >> mask >> count)) return false;
    if (i < 1 || i > n_ - 1 || mask >= (Mask(1) << (n_ - 1))) return false;
    auto terms = std::make_unique<ETerms>();
    terms->reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      unsigned long long m;
      std::string coeff;
      if (!(ss >> m >> coeff)) return false;
      terms->emplace_back(static_cast<Mask>(m), Int(coeff));
    }
    table[(static_cast<std::size_t>(i - 1) << (n_ - 1)) | mask] = std::move(terms);
  }
  for (const auto& slot : table) {
    if (!slot) return false;
  }
  etable_ = std::move(table);
  precomputed_ = true;
  return true;
}

void RingContext::save_e_table(const std::string& path) const {
  if (!precomputed_) return;
  std::ofstream out(path);
  if (!out) return;
  out << "torsionlab-etable n=" << n_ << "\n";
  for (int i = 1; i <= n_ - 1; ++i) {
    for (Mask m = 0; m < (Mask(1) << (n_ - 1)); ++m) {
      const ETerms& terms = *etable_[(static_cast<std::size_t>(i - 1) << (n_ - 1)) | m];
      out << i << ' ' << m << ' ' << terms.size();
      for (const auto& [mm, c] : terms) out << ' ' << mm << ' ' << int_str(c);
      out << '\n';
    }
  }
}

const RingContext& RingElement::context() const {
  if (!ctx_) throw std::logic_error("RingElement: missing context");
  return *ctx_;
}

int RingElement::homogeneous_degree() const {
  if (coeffs_.empty()) return -1;
  int d = ctx_->monomial_degree(coeffs_.begin()->first);
  for (const auto& [m, c] : coeffs_) {
    if (ctx_->monomial_degree(m) != d) return -2;
  }
  return d;
}

bool RingElement::operator==(const RingElement& o) const {
  return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
}

void RingElement::add_term(Mask mask, int tpow, const Int& c) {
  if (int_is_zero(c)) return;
  const int n = ctx_->n();
  if (tpow <= n - 1) {
    coeffs_[Monomial{mask, tpow}] += c;
    return;
  }
  std::map<std::pair<int, Mask>, Int> pending;
  pending[{tpow, mask}] = c;
  reduce_pending(pending);
}

// Reduces t-overflow with t^n = sum_{i=1}^{n-1} (-1)^{i+1} 2 e_i t^{n-i},
// peeling one power at a time from the highest t-power down. Keying the
// worklist by (tpow, mask) merges the intermediate states that different
// reduction paths share.
void RingElement::reduce_pending(std::map<std::pair<int, Mask>, Int>& pending) {
  const int n = ctx_->n();
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    const auto [tp, m] = it->first;
    Int coef = std::move(it->second);
    pending.erase(it);
    if (int_is_zero(coef)) continue;
    if (tp <= n - 1) {
      coeffs_[Monomial{m, tp}] += coef;
      continue;
    }
    for (int i = 1; i <= n - 1; ++i) {
      Int c2 = coef * ((i % 2 == 1) ? 2 : -2);
      for (const auto& [m2, ce] : ctx_->e_times(i, m)) {
        pending[{tp - i, m2}] += c2 * ce;
      }
    }
  }
}

void RingElement::normalize() {
  const unsigned long k = static_cast<unsigned long>(ctx_->trunc_bits());
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (k > 0) it->second = int_mod_pow2(it->second, k);
    if (int_is_zero(it->second)) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement r = *this;
  r += o;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (ctx_ != o.ctx_) throw std::invalid_argument("RingElement: context mismatch");
  for (const auto& [m, c] : o.coeffs_) coeffs_[m] += c;
  normalize();
  return *this;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement r = *this;
  r -= o;
  return r;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  if (ctx_ != o.ctx_) throw std::invalid_argument("RingElement: context mismatch");
  for (const auto& [m, c] : o.coeffs_) coeffs_[m] -= c;
  normalize();
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r(*ctx_);
  for (const auto& [m, c] : coeffs_) r.coeffs_[m] = -c;
  r.normalize();
  return r;
}

RingElement RingElement::operator*(const Int& c) const {
  RingElement r(*ctx_);
  if (int_is_zero(c)) return r;
  for (const auto& [m, cm] : coeffs_) r.coeffs_[m] = cm * c;
  r.normalize();
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const { return mul(*this, o); }

RingElement& RingElement::operator*=(const RingElement& o) {
  *this = mul(*this, o);
  return *this;
}

RingElement zero(const RingContext& ctx) { return RingElement(ctx); }

RingElement one(const RingContext& ctx) {
  RingElement r(ctx);
  r.add_term(0, 0, 1);
  r.normalize();
  return r;
}

RingElement gen_t(const RingContext& ctx) {
  RingElement r(ctx);
  r.add_term(0, 1, 1);
  r.normalize();
  return r;
}

RingElement gen_e(const RingContext& ctx, int i) {
  if (i < 1 || i > ctx.n() - 1) {
    throw std::invalid_argument("gen_e: index outside [1, n-1]");
  }
  RingElement r(ctx);
  r.add_term(mask_bit(i), 0, 1);
  r.normalize();
  return r;
}

RingElement mul(const RingElement& a, const RingElement& b) {
  const RingContext& ctx = a.context();
  if (&ctx != &b.context()) throw std::invalid_argument("mul: context mismatch");
  RingElement out(ctx);
  std::map<std::pair<int, Mask>, Int> pending;
  for (const auto& [mb, cb] : b.coeffs_) {
    for (const auto& [ma, ca] : a.coeffs_) {
      Int c = ca * cb;
      // Combine the e-parts one index at a time through the expansion table;
      // t-overflow is reduced in one batch below.
      std::vector<std::pair<Mask, Int>> spread{{ma.eset, std::move(c)}};
      Mask rest = mb.eset;
      while (rest) {
        int i = __builtin_ctzll(rest) + 1;
        rest &= rest - 1;
        std::map<Mask, Int> next;
        for (const auto& [m1, c1] : spread) {
          for (const auto& [m2, c2] : ctx.e_times(i, m1)) {
            next[m2] += c1 * c2;
          }
        }
        spread.assign(next.begin(), next.end());
      }
      int tpow = ma.tpow + mb.tpow;
      for (auto& [m1, c1] : spread) {
        pending[{tpow, m1}] += c1;
      }
    }
  }
  out.reduce_pending(pending);
  out.normalize();
  return out;
}

RingElement pow(const RingElement& a, unsigned long k) {
  RingElement acc = one(a.context());
  RingElement base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

RingElement mul_by_t(const RingElement& a) {
  RingElement out(a.context());
  for (const auto& [m, c] : a.terms()) out.add_term(m.eset, m.tpow + 1, c);
  out.normalize();
  return out;
}

RingElement mul_by_e(const RingElement& a, int i) {
  const RingContext& ctx = a.context();
  if (i < 1 || i > ctx.n() - 1) throw std::invalid_argument("mul_by_e: index outside [1, n-1]");
  RingElement out(ctx);
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [m2, c2] : ctx.e_times(i, m.eset)) {
      out.add_term(m2, m.tpow, c * c2);
    }
  }
  out.normalize();
  return out;
}

Int x0_coefficient(const RingElement& a) {
  if (a.is_zero()) return 0;
  const RingContext& ctx = a.context();
  int d = a.homogeneous_degree();
  if (d != ctx.dim_x()) {
    throw std::invalid_argument("x0_coefficient: element not homogeneous of degree dimX");
  }
  // The only basis monomial of degree dimX is x0 itself.
  auto it = a.terms().find(ctx.x0_monomial());
  return it == a.terms().end() ? Int(0) : it->second;
}

Valuation valuation_hat(const RingElement& a) {
  Valuation v = Valuation::infinity();
  for (const auto& [m, c] : a.terms()) {
    Valuation vc = Valuation::finite(static_cast<long>(int_trailing_zeros(c)));
    if (vc < v) v = vc;
  }
  return v;
}

bool RPrimeCoordinates::in_2k_rprime(long k) const {
  for (const auto& row : rows) {
    if (!int_divisible_by_pow2(row.coeff, static_cast<unsigned long>(k + row.eweight))) {
      return false;
    }
  }
  return true;
}

RPrimeCoordinates rprime_coordinates(const RingElement& a) {
  RPrimeCoordinates out;
  out.in_rprime = true;
  for (const auto& [m, c] : a.terms()) {
    int w = __builtin_popcountll(m.eset);
    bool div = int_divisible_by_pow2(c, static_cast<unsigned long>(w));
    out.rows.push_back(RPrimeTerm{m, c, w, div});
    if (!div) out.in_rprime = false;
  }
  return out;
}

Valuation valuation_rprime(const RingElement& a) {
  RPrimeCoordinates coords = rprime_coordinates(a);
  if (!coords.in_rprime) throw std::domain_error("valuation_rprime: element not in R'");
  Valuation v = Valuation::infinity();
  for (const auto& row : coords.rows) {
    Valuation vc =
        Valuation::finite(static_cast<long>(int_trailing_zeros(row.coeff)) - row.eweight);
    if (vc < v) v = vc;
  }
  return v;
}

RingElement truncate_mod_2k(const RingElement& a, unsigned long k) {
  if (k < 1) throw std::invalid_argument("truncate_mod_2k: k must be >= 1");
  RingElement out(a.context());
  for (const auto& [m, c] : a.terms()) {
    Int r = int_mod_pow2(c, k);
    if (!int_is_zero(r)) out.add_term(m.eset, m.tpow, r);
  }
  return out;
}

std::string to_canonical_string(const RingElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Int abs_c = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    out << int_str(abs_c);
    if (m.eset) {
      out << "*e{";
      Mask rest = m.eset;
      bool f2 = true;
      while (rest) {
        if (!f2) out << ",";
        out << (__builtin_ctzll(rest) + 1);
        rest &= rest - 1;
        f2 = false;
      }
      out << "}";
    }
    if (m.tpow == 1) out << "*t";
    if (m.tpow >= 2) out << "*t^" << m.tpow;
  }
  return out.str();
}

}  // namespace torsionlab

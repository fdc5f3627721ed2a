#include "torsionlab/decomp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torsionlab {

long long set_degree(const std::vector<long long>& J) {
  long long d = 0;
  for (long long x : J) d += x;
  return d;
}

namespace {

bool degree_is_pow2_minus_1(long long d) { return d >= 1 && is_power_of_2(d + 1); }

std::vector<long long> normalize_set(const std::vector<long long>& J, const char* who) {
  std::set<long long> s;
  for (long long x : J) {
    if (x <= 0) throw std::invalid_argument(std::string(who) + ": elements must be positive");
    if (!s.insert(x).second) {
      throw std::invalid_argument(std::string(who) + ": duplicate element");
    }
  }
  return {s.begin(), s.end()};
}

// Largest-first backtracking; the largest element either pairs with a smaller
// one to a power of 2 or stands alone as a power of 2.
bool decompose(std::vector<long long>& rest, DecompositionCertificate& cert) {
  if (rest.empty()) return true;
  long long x = rest.back();
  rest.pop_back();
  for (std::size_t i = rest.size(); i-- > 0;) {
    long long y = rest[i];
    if (!is_power_of_2(x + y)) continue;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (decompose(rest, cert)) {
      cert.pairs.emplace_back(y, x);
      rest.insert(rest.begin() + static_cast<long>(i), y);
      rest.push_back(x);
      return true;
    }
    rest.insert(rest.begin() + static_cast<long>(i), y);
  }
  if (is_power_of_2(x) && decompose(rest, cert)) {
    cert.singletons.push_back(x);
    rest.push_back(x);
    return true;
  }
  rest.push_back(x);
  return false;
}

}  // namespace

bool check_certificate(const std::vector<long long>& J, const DecompositionCertificate& cert) {
  std::vector<long long> j = normalize_set(J, "check_certificate");
  if (!degree_is_pow2_minus_1(set_degree(j))) return false;
  std::multiset<long long> parts;
  for (long long s : cert.singletons) {
    if (!is_power_of_2(s)) return false;
    parts.insert(s);
  }
  for (const auto& [a, b] : cert.pairs) {
    if (a == b || !is_power_of_2(a + b)) return false;
    parts.insert(a);
    parts.insert(b);
  }
  return std::multiset<long long>(j.begin(), j.end()) == parts;
}

std::optional<DecompositionCertificate> is_totaro_decomposable(const std::vector<long long>& J) {
  std::vector<long long> j = normalize_set(J, "is_totaro_decomposable");
  if (!degree_is_pow2_minus_1(set_degree(j))) return std::nullopt;
  DecompositionCertificate cert;
  if (!decompose(j, cert)) return std::nullopt;
  return cert;
}

bool is_strongly_totaro_decomposable(const std::vector<long long>& J, long long n,
                                     DecompositionCertificate* cert_out) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("is_strongly_totaro_decomposable: n must be even, n >= 2");
  }
  std::vector<long long> j = normalize_set(J, "is_strongly_totaro_decomposable");
  for (long long x : j) {
    if (x > n - 1) {
      throw std::invalid_argument("is_strongly_totaro_decomposable: J must lie in [1, n-1]");
    }
  }
  long long v2n = __builtin_ctzll(static_cast<unsigned long long>(n));
  long long bound = 1LL << v2n;  // 2^{v2(n)}
  std::set<long long> lhs, rhs;
  for (long long x : j) {
    if (x <= bound) lhs.insert(x);
  }
  for (long long i = 0; i <= v2n; ++i) {
    long long p = 1LL << i;
    if (p <= n - 1) rhs.insert(p);
  }
  if (lhs != rhs) return false;
  auto cert = is_totaro_decomposable(j);
  if (!cert) return false;
  if (cert_out) *cert_out = *cert;
  return true;
}

std::vector<long long> construct_Js(int s) {
  if (s < 2) throw std::invalid_argument("construct_Js: s must be >= 2");
  std::vector<long long> J;
  long long half = 1LL << (s - 1);
  for (long long r = 1; r <= (1LL << (s - 2)) - 1; ++r) {
    J.push_back(half + r);
    J.push_back(half - r);
  }
  for (int i = 0; i <= s - 1; ++i) J.push_back(1LL << i);
  std::sort(J.begin(), J.end());
  return J;
}

namespace {

struct Searcher {
  long long n;
  long long target;
  unsigned long long budget;
  unsigned long long nodes = 0;
  bool exhausted = false;
  std::vector<long long> candidates;  // descending
  std::vector<long long> suffix_sum;  // suffix_sum[i] = sum of candidates[i..]
  std::vector<long long> chosen;

  bool go(std::size_t i, long long rem, SearchResult& out) {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (rem == 0) {
      DecompositionCertificate cert;
      if (is_strongly_totaro_decomposable(chosen, n, &cert)) {
        out.J = chosen;
        std::sort(out.J.begin(), out.J.end());
        out.cert = cert;
        return true;
      }
      return false;
    }
    if (i == candidates.size() || suffix_sum[i] < rem) return false;
    if (candidates[i] <= rem) {
      chosen.push_back(candidates[i]);
      if (go(i + 1, rem - candidates[i], out)) return true;
      chosen.pop_back();
      if (exhausted) return false;
    }
    return go(i + 1, rem, out);
  }
};

}  // namespace

SearchResult search_strongly_decomposable(long long n, long long target_degree,
                                          const std::vector<long long>& must_exclude,
                                          unsigned long long node_budget) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("search_strongly_decomposable: n must be even, n >= 4");
  }
  if (!degree_is_pow2_minus_1(target_degree)) {
    throw std::invalid_argument("search_strongly_decomposable: degree must be 2^a - 1, a >= 1");
  }
  std::set<long long> excluded(must_exclude.begin(), must_exclude.end());
  for (long long x : excluded) {
    if (x < 1 || x > n - 1) {
      throw std::invalid_argument("search_strongly_decomposable: must_exclude outside [1, n-1]");
    }
  }

  SearchResult result;
  // The strong boundary condition fixes J ∩ [1, 2^{v2(n)}] completely: those
  // powers of 2 are forced in, everything else up to 2^{v2(n)} is forced out.
  long long v2n = __builtin_ctzll(static_cast<unsigned long long>(n));
  long long bound = 1LL << v2n;
  std::vector<long long> forced;
  long long forced_sum = 0;
  for (long long i = 0; i <= v2n; ++i) {
    long long p = 1LL << i;
    if (p > n - 1) continue;
    if (excluded.count(p)) return result;  // none_proven: boundary impossible
    forced.push_back(p);
    forced_sum += p;
  }
  if (forced_sum > target_degree) return result;

  Searcher searcher;
  searcher.n = n;
  searcher.target = target_degree;
  searcher.budget = node_budget;
  for (long long x = n - 1; x > bound; --x) {
    if (!excluded.count(x)) searcher.candidates.push_back(x);
  }
  searcher.suffix_sum.assign(searcher.candidates.size() + 1, 0);
  for (std::size_t i = searcher.candidates.size(); i-- > 0;) {
    searcher.suffix_sum[i] = searcher.suffix_sum[i + 1] + searcher.candidates[i];
  }
  searcher.chosen = forced;

  bool found = searcher.go(0, target_degree - forced_sum, result);
  result.nodes_visited = searcher.nodes;
  if (found) {
    if (!check_certificate(result.J, result.cert)) {
      throw std::logic_error("search_strongly_decomposable: witness failed re-check");
    }
    result.outcome = SearchOutcome::found;
  } else {
    result.outcome =
        searcher.exhausted ? SearchOutcome::budget_exhausted : SearchOutcome::none_proven;
  }
  return result;
}

}  // namespace torsionlab

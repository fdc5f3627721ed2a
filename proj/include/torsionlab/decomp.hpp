#pragma once

#include <optional>
#include <vector>

namespace torsionlab {

inline bool is_power_of_2(long long x) { return x > 0 && (x & (x - 1)) == 0; }

// A partition of a set into power-of-2 singletons and pairs whose sums are
// powers of 2.
struct DecompositionCertificate {
  std::vector<long long> singletons;
  std::vector<std::pair<long long, long long>> pairs;
};

long long set_degree(const std::vector<long long>& J);

// True iff the certificate partitions J exactly, every singleton is a power
// of 2, every pair sums to a power of 2, and deg J = 2^a - 1 for some a >= 1.
bool check_certificate(const std::vector<long long>& J, const DecompositionCertificate& cert);

// Exhaustive backtracking decision; returns a witness certificate when
// decomposable. Elements are tried largest-first, pairing before singleton.
std::optional<DecompositionCertificate> is_totaro_decomposable(const std::vector<long long>& J);

// Decomposable and J ∩ [1, 2^{v2(n)}] = {2^i : i in [0, v2(n)]} ∩ [1, n-1].
// Requires even n and J ⊆ [1, n-1].
bool is_strongly_totaro_decomposable(const std::vector<long long>& J, long long n,
                                     DecompositionCertificate* cert_out = nullptr);

// J_s = {2^{s-1}+r, 2^{s-1}-r : 1 <= r <= 2^{s-2}-1} ∪ {2^i : 0 <= i <= s-1},
// of degree 2^{2s-2} - 1. Requires s >= 2.
std::vector<long long> construct_Js(int s);

enum class SearchOutcome { found, none_proven, budget_exhausted };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::none_proven;
  std::vector<long long> J;        // populated when found
  DecompositionCertificate cert;   // independently re-checked witness
  unsigned long long nodes_visited = 0;
};

// Exhaustive search for a strongly Totaro-decomposable J ⊆ [1, n-1] of the
// given degree avoiding must_exclude. A budget exhaustion is reported
// distinctly from a proven absence.
SearchResult search_strongly_decomposable(long long n, long long target_degree,
                                          const std::vector<long long>& must_exclude,
                                          unsigned long long node_budget = 50000000ULL);

}  // namespace torsionlab

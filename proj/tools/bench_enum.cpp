// Compares the serial reference enumeration against the OpenMP kernel on the
// top-degree oracle runs and checks that both reductions agree.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "torsionlab/sublattice.hpp"

using namespace torsionlab;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench(const char* name, int n, SubringLabel label, int trunc_bits) {
  RingContext ctx(n, trunc_bits);
  auto t0 = std::chrono::steady_clock::now();
  TorsionReport serial = torsion_oracle_serial(ctx, label);
  double ts = seconds(t0);
  t0 = std::chrono::steady_clock::now();
  TorsionReport parallel = torsion_oracle_parallel(ctx, label);
  double tp = seconds(t0);
  bool agree = serial.tau == parallel.tau && serial.tau2 == parallel.tau2 &&
               serial.monomials_considered == parallel.monomials_considered;
  std::printf("%-24s n=%d  leaves=%-8llu tau2=%-3lld serial=%7.3fs  parallel=%7.3fs  "
              "speedup=%5.2fx  %s\n",
              name, n, serial.monomials_considered, serial.tau2, ts, tp,
              tp > 0 ? ts / tp : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  bench("so / R_prime_so", 6, SubringLabel::R_prime_so, 0);
  bench("so / R_prime_so", 7, SubringLabel::R_prime_so, 0);
  bench("hspin / R_hspin", 6, SubringLabel::R_hspin, 0);
  bench("pgo / R_bar_pgo", 8, SubringLabel::R_bar_pgo, 0);
  bench("hspin / R_hspin mod2^7", 8, SubringLabel::R_hspin, 7);
  return 0;
}

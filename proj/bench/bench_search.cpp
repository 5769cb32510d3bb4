// Serial reference vs OpenMP kernels for the contraction searches.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "vinberg/search.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
  std::printf("threads: %d, samples: %zu\n", omp_get_max_threads(), n);

  vinberg::SearchResult serial, parallel;
  const double ts = seconds([&] { serial = vinberg::search_violations_serial({1, n, true}); });
  const double tp = seconds([&] { parallel = vinberg::search_violations({1, n, true}); });
  std::printf("omega search  serial %8.3f s  omp %8.3f s  speedup %5.2f  max ratio %.6f / %.6f\n",
              ts, tp, ts / tp, serial.max_ratio, parallel.max_ratio);

  double ms = 0.0, mp = 0.0;
  const double ss = seconds([&] { ms = vinberg::max_ratio_sym_serial(1, n); });
  const double sp = seconds([&] { mp = vinberg::max_ratio_sym(1, n); });
  std::printf("sym search    serial %8.3f s  omp %8.3f s  speedup %5.2f  max ratio %.6f / %.6f\n",
              ss, sp, ss / sp, ms, mp);
  return serial.max_ratio == parallel.max_ratio && ms == mp ? 0 : 1;
}

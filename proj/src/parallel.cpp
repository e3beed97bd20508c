#include "qct/parallel.hpp"

#ifdef QCT_HAVE_OPENMP
#include <omp.h>
#endif

#include <atomic>

namespace qct::parallel {

namespace {
std::atomic<bool> g_enabled{true};
std::atomic<int> g_max_threads{0}; // 0 = library default
} // namespace

bool enabled() {
#ifdef QCT_HAVE_OPENMP
  return g_enabled.load(std::memory_order_relaxed);
#else
  return false;
#endif
}

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

int max_threads() {
#ifdef QCT_HAVE_OPENMP
  int n = g_max_threads.load(std::memory_order_relaxed);
  return n > 0 ? n : omp_get_max_threads();
#else
  return 1;
#endif
}

void set_max_threads(int n) { g_max_threads.store(n, std::memory_order_relaxed); }

} // namespace qct::parallel

#include "gsp4/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gsp4 {

int worker_count() {
  static const int n = [] {
    int cap = 0;
    if (const char* env = std::getenv("GSP4_THREADS")) {
      try {
        cap = std::max(1, std::stoi(env));
      } catch (...) {
        cap = 0;
      }
    }
#if defined(_OPENMP)
    int hw = omp_get_max_threads();
#else
    int hw = 1;
#endif
    return cap > 0 ? std::min(cap, hw) : hw;
  }();
  return n;
}

} // namespace gsp4

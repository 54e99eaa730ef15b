#include "aeu/parallel.hpp"

#include <cstdlib>
#include <string>

namespace aeu {

int worker_count() {
  static const int cached = [] {
    int n = 1;
#ifdef AEU_HAVE_OPENMP
    n = omp_get_max_threads();
#endif
    if (const char* env = std::getenv("AEU_THREADS")) {
      try {
        const int cap = std::stoi(env);
        if (cap >= 1 && cap < n) n = cap;
      } catch (...) {
        // Ignore unparsable values; the variable is a tuning knob only.
      }
    }
    return n;
  }();
  return cached;
}

}  // namespace aeu

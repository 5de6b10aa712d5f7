#include "sectorlen/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace sectorlen {

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SECTORLEN_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  int v = omp_get_max_threads();
  return v > 0 ? v : 1;
}

}  // namespace sectorlen

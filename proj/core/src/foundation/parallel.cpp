#include "ckit/foundation/parallel.hpp"

#include <cstdlib>

namespace ckit {

unsigned default_workers() {
  if (const char* env = std::getenv("CKIT_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return static_cast<unsigned>(w);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace ckit

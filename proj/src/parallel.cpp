#include "salemtwist/parallel.hpp"

#include <cstdlib>
#include <string>

namespace salemtwist {

unsigned default_thread_count() {
  if (const char* env = std::getenv("SALEMTWIST_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace salemtwist

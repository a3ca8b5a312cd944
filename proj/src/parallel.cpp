#include "qdot/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qdot {

std::size_t default_worker_count() {
    if (const char* env = std::getenv("QDOT_WORKERS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<std::size_t>(n);
        } catch (...) {
            // fall through to hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace qdot

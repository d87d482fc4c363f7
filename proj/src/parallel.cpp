#include "zetalab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace zetalab {

std::size_t worker_count() {
    if (const char* env = std::getenv("ZETALAB_THREADS")) {
        try {
            std::size_t used = 0;
            const long long n = std::stoll(env, &used);
            if (used == std::string(env).size() && n > 0) return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace zetalab

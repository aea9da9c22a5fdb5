#include "graphbounds/parallel.hpp"

#include <cstdlib>
#include <string>

namespace graphbounds {

int thread_count() {
    if (const char* env = std::getenv("GRAPHBOUNDS_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && value >= 1) return static_cast<int>(value);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace graphbounds

#include "meanforge/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace meanforge {

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("MEANFORGE_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) n = std::min(n, cap);
        } catch (...) {
            // Unparseable cap: keep the hardware default.
        }
    }
    return n;
}

}  // namespace meanforge

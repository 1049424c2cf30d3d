#include "hq/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hq::par {

int max_threads() {
    static const int cached = [] {
        if (const char* env = std::getenv("HQ_THREADS")) {
            try {
                int n = std::stoi(env);
                if (n >= 1) return n;
            } catch (const std::exception&) {
                // fall through to the hardware default
            }
        }
        unsigned hc = std::thread::hardware_concurrency();
        return hc > 0 ? static_cast<int>(hc) : 1;
    }();
    return cached;
}

}  // namespace hq::par

#include "dsep/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsep {

namespace {

std::atomic<int> g_override{0};

int env_default() {
    static const int cached = [] {
        int hw = 1;
#ifdef _OPENMP
        hw = omp_get_max_threads();
#endif
        if (const char* s = std::getenv("DISKSEVER_THREADS")) {
            const int v = std::atoi(s);
            if (v >= 1) hw = std::min(hw, v);
        }
        return std::max(hw, 1);
    }();
    return cached;
}

}  // namespace

int max_threads() {
    const int o = g_override.load(std::memory_order_relaxed);
    return o > 0 ? o : env_default();
}

void set_max_threads(int threads) {
    g_override.store(threads > 0 ? threads : 0, std::memory_order_relaxed);
}

}  // namespace dsep

#include "slicmag/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace slicmag {

int worker_count() {
    int n = 0;
    if (const char* env = std::getenv("SLICMAG_THREADS")) n = std::atoi(env);
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return n;
}

void parallel_for(int begin, int end, const std::function<void(int, int)>& fn) {
    const int span = end - begin;
    if (span <= 0) return;
    const int workers = std::min(worker_count(), span);
    if (workers == 1) {
        fn(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (span + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = begin + w * chunk;
        const int hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace slicmag

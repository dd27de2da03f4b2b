#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace torq {

/* Worker count from TORQ_WORKERS, falling back to the hardware. Results are
 * always merged by task index, so sharding never affects output order. */
inline int worker_count() {
    if (const char* env = std::getenv("TORQ_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1)
            return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

template <class Fn>
void parallel_for(int n, Fn&& fn) {
    int w = std::min(worker_count(), n);
    if (w <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> ts;
    for (int t = 0; t < w; ++t)
        ts.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n)
                    break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    next.store(n);  // drain remaining work
                }
            }
        });
    for (auto& t : ts)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

}  // namespace torq

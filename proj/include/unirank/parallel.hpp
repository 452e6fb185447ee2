#ifndef UNIRANK_PARALLEL_HPP
#define UNIRANK_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace unirank {

/* Runs body(i) for every i in [lo, hi] across the given number of threads.
 * Work items are claimed through an atomic counter; each i is processed by
 * exactly one thread, so results indexed by i are deterministic no matter
 * how the schedule interleaves. The first exception, if any, is rethrown on
 * the calling thread. */
template <typename F>
void parallel_for(int lo, int hi, int threads, F&& body) {
    if (hi < lo) return;
    if (threads <= 1) {
        for (int i = lo; i <= hi; ++i) body(i);
        return;
    }
    std::atomic<int> cursor(lo);
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = cursor.fetch_add(1);
            if (i > hi) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min(threads, hi - lo + 1);
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace unirank

#endif  // UNIRANK_PARALLEL_HPP

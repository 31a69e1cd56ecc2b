#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hamlab {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items must be
// independent; callers keep determinism by writing into slot i of a
// preallocated result vector. The first exception thrown by any item is
// rethrown on the calling thread after all workers stop.
template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
    if (count <= 0) return;
    if (jobs < 1) jobs = 1;
    const int workers = jobs < count ? jobs : count;
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace hamlab

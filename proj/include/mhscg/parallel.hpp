#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mhscg {

/// Runs fn(0), ..., fn(n_jobs-1) on up to `threads` workers.
/// Jobs must be independent (disjoint writes); the first exception thrown by
/// any job is rethrown after all workers join.
inline void parallel_for(int n_jobs, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n_jobs <= 1) {
        for (int i = 0; i < n_jobs; ++i) fn(i);
        return;
    }
    const int workers = std::min(threads, n_jobs);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n_jobs; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mhscg

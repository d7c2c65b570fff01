#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mdz {

// Runs fn(i) for i in [0, n_items) on up to `jobs` threads. Results are
// stored by index, so the output order is deterministic regardless of
// scheduling. The first exception, if any, is rethrown after all workers
// finish.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n_items, int jobs, F&& fn) {
    std::vector<T> out(n_items);
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || n_items <= 1) {
        for (std::size_t i = 0; i < n_items; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mx;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n_items || failed.load()) break;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mx);
                if (!err) err = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n_items);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

inline int default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace mdz

#ifndef QDOT_PARALLEL_HPP
#define QDOT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qdot {

/// Worker count from QDOT_WORKERS, else hardware concurrency, else 1.
std::size_t default_worker_count();

/// Runs fn(i) for i in [0, count) on `workers` threads.  Results must be
/// written into index-addressed slots by the caller so the outcome does not
/// depend on scheduling.  The first exception (lowest index) is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
    if (workers == 0) workers = default_worker_count();
    if (workers > count) workers = count == 0 ? 1 : count;

    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();

    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace qdot

#endif

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace phasebench {

/// Worker count: `requested` if non-zero, else hardware concurrency, capped
/// by the PHASEBENCH_THREADS environment variable when it is set.
inline unsigned worker_count(unsigned requested = 0) {
    unsigned count = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("PHASEBENCH_THREADS"); cap != nullptr && *cap != '\0') {
        try {
            const unsigned long limit = std::stoul(cap);
            if (limit >= 1)
                count = std::min<unsigned>(count, static_cast<unsigned>(limit));
        } catch (const std::exception&) {
            // Unparseable cap: ignore it.
        }
    }
    return std::max(1u, count);
}

/// Calls task(i) for i in [0, count) on up to `workers` threads. Tasks must
/// write only to their own slot; the first exception is rethrown.
template <class Task>
void parallel_for(std::size_t count, unsigned workers, Task task) {
    workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failureLock;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        task(i);
                    } catch (...) {
                        const std::lock_guard lock(failureLock);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace phasebench

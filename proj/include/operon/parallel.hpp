#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace operon {

/// Worker count: OPERON_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("OPERON_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, n) over contiguous chunks. `body` must only
/// write state owned by index i. The first exception is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t min_chunk = 1024) {
    const std::size_t workers =
        std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_chunk)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    const std::size_t end = std::min(n, (w + 1) * chunk);
                    for (std::size_t i = w * chunk; i < end; ++i) body(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace operon

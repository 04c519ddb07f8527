#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace minordeg {

// Default worker count: MINORDEG_THREADS if set, else hardware concurrency.
inline unsigned default_threads() {
    if (const char* env = std::getenv("MINORDEG_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [begin, end) across `threads` workers. Work is handed
// out dynamically, so callers must only write to per-index slots (results
// keyed by i stay deterministic regardless of the schedule).
inline void parallel_for(std::size_t begin, std::size_t end, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
    if (begin >= end) return;
    std::size_t total = end - begin;
    unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    if (workers == 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{begin};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= end) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    cursor.store(end);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace minordeg

#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace arrangetop {

/// Thread cap: ARRANGETOP_THREADS when set, hardware concurrency otherwise.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("ARRANGETOP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Run fn(0..count-1), splitting indices over threads. The work must be
/// pure per index; results are written into index-addressed slots, so the
/// outcome is schedule independent.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned threads = std::min<size_t>(thread_cap(), count);
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (size_t i = w; i < count; i += threads) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace arrangetop

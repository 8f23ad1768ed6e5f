#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ospinv {

/// Worker count from OSPINV_THREADS, falling back to 1.
inline int default_threads() {
    if (const char* env = std::getenv("OSPINV_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return 1;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers and returns the
/// results in index order, so the output does not depend on scheduling.
template <typename R>
std::vector<R> parallel_map(size_t count, int threads, const std::function<R(size_t)>& fn) {
    std::vector<R> out(count);
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, int(count));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace ospinv

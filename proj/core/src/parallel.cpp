#include "curlicue/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace curlicue {

unsigned default_thread_count() {
    if (const char* env = std::getenv("CURLICUE_THREADS")) {
        unsigned value = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc() && ptr == end && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (count == 0) return;
    if (threads == 0) threads = default_thread_count();
    // Tiny workloads are not worth a thread launch.
    constexpr std::size_t kMinChunk = 1024;
    const std::size_t workers =
        std::min<std::size_t>(threads, std::max<std::size_t>(1, count / kMinChunk));
    if (workers <= 1) {
        body(0, count);
        return;
    }

    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([&, w, begin, end] {
                try {
                    body(begin, end);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
}

}  // namespace curlicue

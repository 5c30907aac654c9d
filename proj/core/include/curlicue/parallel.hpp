#pragma once

#include <cstddef>
#include <functional>

namespace curlicue {

/// Worker count: CURLICUE_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned default_thread_count();

/// Calls body(begin, end) on disjoint contiguous chunks covering [0, count).
/// threads == 0 selects default_thread_count(). Blocks until all chunks finish.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace curlicue

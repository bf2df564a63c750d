#pragma once

#include <functional>

namespace silverline {

/// Worker count: SILVERLINE_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int thread_count();

/// Runs body(chunk) for chunk = 0..chunks-1 on up to `threads` workers.
/// Chunks are claimed in increasing order; the first exception is rethrown.
void for_each_chunk(long long chunks, int threads, const std::function<void(long long)>& body);

}  // namespace silverline

#pragma once

// Worker pool helpers. Work is split into index ranges whose results land in
// fixed slots, so every reduction sees its inputs in the same order no matter
// how many threads ran them.

#include <cstddef>
#include <functional>
#include <span>

namespace hw {

/// Number of workers: hardware concurrency, capped by HW_THREADS when set to
/// a positive integer.
int worker_count();

/// Calls body(i) for i in [0, n), spread over worker_count() threads. The
/// first exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Pairwise (cascade) summation in a fixed tree order.
double pairwise_sum(std::span<const double> values);

}  // namespace hw

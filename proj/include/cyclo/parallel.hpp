#pragma once

#include <cstdint>
#include <functional>

namespace cyclo {

/// Worker count: CYCLO_THREADS when set (minimum 1), otherwise the
/// hardware concurrency.
int worker_count();

/// Run fn(i) for i in [0, count) across workers. Callers write results to
/// disjoint slots, so the outcome is independent of the thread count.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn);

} // namespace cyclo

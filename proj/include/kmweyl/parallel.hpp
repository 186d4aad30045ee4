#ifndef KMWEYL_PARALLEL_HPP
#define KMWEYL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace kmweyl {

/// Worker count: KMWEYL_THREADS if set (clamped to >= 1), otherwise the
/// hardware concurrency.
int worker_count();

/// Runs f(0..n-1), possibly on several threads. Callers must make f(i)
/// independent; deterministic output is achieved by writing results into
/// index i of a pre-sized container.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

} // namespace kmweyl

#endif

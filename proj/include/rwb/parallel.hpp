#pragma once

#include <cstddef>
#include <functional>

namespace rwb {

/// Caps the worker pool used by parallel_for; 0 restores the hardware default.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs fn(i) for i in [0, count) across the worker pool. Each index is
/// processed exactly once and results must be written to per-index slots, so
/// the outcome does not depend on scheduling. Reductions stay with the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace rwb

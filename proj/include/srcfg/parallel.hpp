#pragma once

#include <cstddef>
#include <functional>

namespace srcfg {

/// Caps the number of worker threads used by the library. Zero restores the
/// default (hardware concurrency).
void set_thread_limit(unsigned n);
unsigned thread_limit();

/// Runs body(i) for i in [0, count) on up to thread_limit() workers. Tasks
/// are handed out dynamically; callers write into per-index slots so results
/// do not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace srcfg

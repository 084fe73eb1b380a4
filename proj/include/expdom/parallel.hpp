#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace expdom {

/// Explicit request, else EXPDOM_THREADS, else the hardware concurrency (at least 1).
std::size_t resolve_threads(std::optional<std::size_t> requested = std::nullopt);

/**
 * Runs body(i) for i in [0, count) on up to `threads` workers. Results must be
 * written to per-index slots; the exception of the lowest failing index is rethrown.
 */
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace expdom

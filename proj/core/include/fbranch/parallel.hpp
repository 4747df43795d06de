#pragma once

#include <cstddef>
#include <functional>

namespace fbranch {

// Thread count from FBRANCH_THREADS, else hardware concurrency; `requested` > 0 wins.
std::size_t worker_count(std::size_t requested = 0);

// Runs body(i) for i in [0, count). Each index runs exactly once; callers write
// results into per-index slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

}  // namespace fbranch

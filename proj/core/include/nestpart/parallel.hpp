#pragma once

#include <cstdint>
#include <functional>

namespace nestpart {

// Worker count used by parallel loops. Controlled by the NESTPART_THREADS
// environment variable; 0 or unset means one worker per hardware thread.
int worker_count();

// Runs f(begin, end) over disjoint chunks of [0, n). Falls back to a single
// serial call when only one worker is configured or the range is small.
// Callers are responsible for making chunk writes disjoint; results must not
// depend on chunk boundaries.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& f);

} // namespace nestpart

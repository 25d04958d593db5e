#pragma once

#include <cstdint>
#include <functional>

namespace fdacov {

// Worker-count resolution: FDACOV_THREADS (if set) capped by the OpenMP
// maximum, with an optional programmatic override. All parallel loops in the
// library write to disjoint per-index slots and reduce serially, so results
// are identical for every thread count.
namespace threads {

int effective();
void set_override(int n); // n <= 0 clears the override

} // namespace threads

// Static-partition parallel for over [0, n). body(i) must only touch
// per-index state. Runs serially when nested inside another parallel region.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

} // namespace fdacov

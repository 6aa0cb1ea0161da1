#pragma once

#include <cstddef>
#include <functional>

namespace hkens {

// Worker cap from HKENS_THREADS; 0 or unset means sequential.
std::size_t worker_count();

// Runs fn(i) for i in [0, n) over contiguous index blocks. fn must write only
// to slots it owns, so the result is identical to the sequential loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hkens

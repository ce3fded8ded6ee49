#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace cdgacalc::detail {

/// Runs body(i) for i in [0, n) on OpenMP threads and rethrows the first
/// failure (lowest index) on the calling thread.
template <class F>
void parallel_for(int n, F&& body)
{
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n > 0 ? n : 0));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace cdgacalc::detail

#pragma once

// Row-reduction kernels over raw element types.  Shared by the OpenMP
// entry point and the serial reference so both run the same arithmetic.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cdgacalc::exact::detail {

struct RationalOps {
    using T = mpq_class;
    static bool zero(const T& a) { return sgn(a) == 0; }
    static T inv(const T& a) { return 1 / a; }
    static void scale(T& a, const T& f) { a *= f; }
    // a -= f * b
    static void axpy(T& a, const T& f, const T& b) { a -= f * b; }
};

struct ModularOps {
    using T = std::uint32_t;
    std::uint32_t p;

    bool zero(T a) const { return a == 0; }
    T inv(T a) const
    {
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<T>(result);
    }
    void scale(T& a, T f) const { a = static_cast<T>(std::uint64_t{a} * f % p); }
    void axpy(T& a, T f, T b) const
    {
        std::uint64_t prod = std::uint64_t{f} * b % p;
        a = static_cast<T>((a + p - prod) % p);
    }
};

// Minimum rows*cols for which the elimination step is handed to OpenMP.
inline constexpr std::size_t parallel_threshold = 4096;

/// In-place RREF of a row-major rows x cols array.  Returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref_inplace(std::vector<typename Ops::T>& a, std::size_t rows,
                                      std::size_t cols, const Ops& ops, bool parallel)
{
    using T = typename Ops::T;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && ops.zero(a[p * cols + c]))
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a[p * cols + j], a[r * cols + j]);
        T inv = ops.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j)
            ops.scale(a[r * cols + j], inv);

        const T* prow = &a[r * cols];
        const bool go_parallel = parallel && (rows - 1) * (cols - c) >= parallel_threshold;
        const auto nrows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (go_parallel)
        for (std::ptrdiff_t i = 0; i < nrows; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (ui == r || ops.zero(a[ui * cols + c]))
                continue;
            T f = a[ui * cols + c];
            T* row = &a[ui * cols];
            for (std::size_t j = c; j < cols; ++j)
                if (!ops.zero(prow[j]))
                    ops.axpy(row[j], f, prow[j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace cdgacalc::exact::detail

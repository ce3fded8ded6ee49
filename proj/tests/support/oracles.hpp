#pragma once

// Test-side oracles written without the engine's linear algebra or
// monomial code: plain mpq_class / modular elimination and explicit word
// and exponent enumeration.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace testsupport::oracle {

inline std::size_t rank_rational(std::vector<std::vector<mpq_class>> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            const mpq_class f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1;
    b %= p;
    for (; e > 0; e >>= 1, b = b * b % p)
        if (e & 1)
            r = r * b % p;
    return r;
}

inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p)
{
    for (auto& row : rows)
        for (auto& x : row)
            x = ((x % p) + p) % p;
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        const std::int64_t inv = power_mod(rows[rank][c], p - 2, p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            const std::int64_t f = rows[r][c] * inv % p;
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Number of words of degree n over letters of the given degrees whose
/// last letter is not in `forbidden_last`.
inline std::size_t count_words(const std::vector<int>& degrees, int n, const std::vector<bool>& forbidden_last)
{
    std::vector<std::size_t> any(static_cast<std::size_t>(n) + 1, 0);
    any[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int d : degrees)
            if (d <= m)
                any[static_cast<std::size_t>(m)] += any[static_cast<std::size_t>(m - d)];
    if (n == 0)
        return 1;
    std::size_t total = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (!forbidden_last[i] && degrees[i] <= n)
            total += any[static_cast<std::size_t>(n - degrees[i])];
    return total;
}

/// dim of degree n of the free graded-commutative algebra: odd generators
/// are exterior (when `odd_square_zero`), even ones polynomial.
inline std::size_t count_gc(const std::vector<int>& degrees, int n, bool odd_square_zero = true)
{
    std::vector<std::size_t> series(static_cast<std::size_t>(n) + 1, 0);
    series[0] = 1;
    for (int d : degrees) {
        std::vector<std::size_t> next(series.size(), 0);
        for (int m = 0; m <= n; ++m) {
            if (series[static_cast<std::size_t>(m)] == 0)
                continue;
            const int max_power = (d % 2 == 1 && odd_square_zero) ? 1 : n;
            for (int e = 0; e <= max_power && m + e * d <= n; ++e)
                next[static_cast<std::size_t>(m + e * d)] += series[static_cast<std::size_t>(m)];
        }
        series = std::move(next);
    }
    return series[static_cast<std::size_t>(n)];
}

}  // namespace testsupport::oracle

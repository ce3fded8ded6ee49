#include "cdgacalc/exact/linalg.hpp"

#include "cdgacalc/errors.hpp"
#include "rref_kernels.hpp"

namespace cdgacalc::exact {

namespace {

RrefResult run_rref(const ExactMatrix& m, bool parallel)
{
    const FieldSpec field = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    RrefResult out{ExactMatrix(field, rows, cols), {}, 0};

    if (field.is_rational()) {
        std::vector<mpq_class> a(rows * cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                a[r * cols + c] = m(r, c).rational();
        out.pivots = detail::rref_inplace(a, rows, cols, detail::RationalOps{}, parallel);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (sgn(a[r * cols + c]) != 0)
                    out.reduced(r, c) = Scalar::from_rational(field, a[r * cols + c]);
    } else {
        std::vector<std::uint32_t> a(rows * cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                a[r * cols + c] = m(r, c).residue();
        detail::ModularOps ops{field.characteristic()};
        out.pivots = detail::rref_inplace(a, rows, cols, ops, parallel);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (a[r * cols + c] != 0)
                    out.reduced(r, c) = Scalar::from_int(field, a[r * cols + c]);
    }
    out.rank = out.pivots.size();
    return out;
}

}  // namespace

RrefResult rref(const ExactMatrix& m) { return run_rref(m, true); }

namespace reference {
RrefResult rref(const ExactMatrix& m) { return run_rref(m, false); }
}  // namespace reference

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const ExactMatrix& m)
{
    const auto rr = rref(m);
    const FieldSpec field = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots)
        is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(field, m.cols());
        v[free] = Scalar::one(field);
        for (std::size_t i = 0; i < rr.rank; ++i)
            v[rr.pivots[i]] = -rr.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const ExactMatrix& m, std::span<const Scalar> b)
{
    if (b.size() != m.rows())
        throw AlgebraError("right-hand side length does not match row count");
    const FieldSpec field = m.field();
    ExactMatrix aug(field, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols())
        return std::nullopt;
    Vector x = zero_vector(field, m.cols());
    for (std::size_t i = 0; i < rr.rank; ++i)
        x[rr.pivots[i]] = rr.reduced(i, m.cols());
    return x;
}

SparseVector to_sparse(std::span<const Scalar> v)
{
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out.emplace_back(i, v[i]);
    return out;
}

Vector to_dense(FieldSpec field, const SparseVector& v, std::size_t n)
{
    Vector out = zero_vector(field, n);
    for (const auto& [i, s] : v) {
        if (i >= n)
            throw AlgebraError("sparse index out of range");
        out[i] = s;
    }
    return out;
}

namespace {

// a - f * b for sparse vectors with sorted indices.
SparseVector sub_scaled(const SparseVector& a, const Scalar& f, const SparseVector& b)
{
    SparseVector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(f * b[j].second));
            ++j;
        } else {
            Scalar s = a[i].second - f * b[j].second;
            if (!s.is_zero())
                out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseVector SparseEchelon::reduce(SparseVector v) const
{
    // Stored rows only carry entries at or right of their leading column,
    // so a left-to-right sweep over pivot columns terminates.
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = rows_.find(v[pos].first);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        const Scalar f = v[pos].second;
        v = sub_scaled(v, f, it->second);
        // entries left of pos are untouched; v[pos] was cancelled
    }
    return v;
}

bool SparseEchelon::insert(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    const Scalar inv = v.front().second.inverse();
    for (auto& [c, s] : v)
        s *= inv;
    const std::size_t lead = v.front().first;
    rows_.emplace(lead, std::move(v));
    return true;
}

std::vector<std::size_t> SparseEchelon::pivots() const
{
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& [c, row] : rows_)
        out.push_back(c);
    return out;
}

}  // namespace cdgacalc::exact

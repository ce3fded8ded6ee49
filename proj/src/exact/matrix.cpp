#include "cdgacalc/exact/matrix.hpp"

#include "cdgacalc/errors.hpp"

namespace cdgacalc::exact {

Vector zero_vector(FieldSpec field, std::size_t n)
{
    return Vector(n, Scalar::zero(field));
}

bool is_zero(std::span<const Scalar> v)
{
    for (const auto& s : v)
        if (!s.is_zero())
            return false;
    return true;
}

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field))
{
}

ExactMatrix::ExactMatrix(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InputError("ragged matrix literal");
        for (long long v : r)
            data_.push_back(Scalar::from_int(field, v));
    }
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n)
{
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(field);
    return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec field, std::size_t cols, std::span<const Vector> rows)
{
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw AlgebraError("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> cols)
{
    ExactMatrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw AlgebraError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

ExactMatrix ExactMatrix::transposed() const
{
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Vector ExactMatrix::apply(std::span<const Scalar> x) const
{
    if (x.size() != cols_)
        throw AlgebraError("vector length does not match column count");
    Vector y = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!x[c].is_zero() && !(*this)(r, c).is_zero())
                y[r] += (*this)(r, c) * x[c];
    return y;
}

}  // namespace cdgacalc::exact

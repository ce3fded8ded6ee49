#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cdgacalc/exact/scalar.hpp"

namespace cdgacalc::exact {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over an exact field.
class ExactMatrix {
public:
    ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
    /// Small integer literal matrices, mostly for tests.
    ExactMatrix(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows);

    static ExactMatrix identity(FieldSpec field, std::size_t n);
    /// Builds a matrix whose rows are the given vectors (all of length cols).
    static ExactMatrix from_rows(FieldSpec field, std::size_t cols, std::span<const Vector> rows);
    /// Builds a matrix whose columns are the given vectors (all of length rows).
    static ExactMatrix from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> cols);

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    ExactMatrix transposed() const;
    Vector apply(std::span<const Scalar> x) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace cdgacalc::exact

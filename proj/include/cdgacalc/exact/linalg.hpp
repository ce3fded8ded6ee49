#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cdgacalc/exact/matrix.hpp"

namespace cdgacalc::exact {

struct RrefResult {
    ExactMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form.  Pivot choice: first nonzero entry of the
/// column in row order.  Row elimination runs on OpenMP threads for
/// large matrices; the result is identical to reference::rref.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of the null space, one vector per free column (in column order),
/// each with a 1 in its free column.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const ExactMatrix& m, std::span<const Scalar> b);

namespace reference {
/// Single-threaded rref kept as the reference for the parallel kernel.
RrefResult rref(const ExactMatrix& m);
}  // namespace reference

/// A sparse vector: strictly increasing column indices, nonzero entries.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(std::span<const Scalar> v);
Vector to_dense(FieldSpec field, const SparseVector& v, std::size_t n);

/// Incrementally built echelon basis of a row space, stored sparsely.
/// Leading columns are the pivot columns of the space's rref.
class SparseEchelon {
public:
    explicit SparseEchelon(FieldSpec field) : field_(field) {}

    /// Adds v to the spanning set; returns true if the rank grew.
    bool insert(SparseVector v);
    /// Fully reduces v against the basis: the result has no entry in any
    /// pivot column and is independent of insertion order.
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
    std::vector<std::size_t> pivots() const;
    FieldSpec field() const { return field_; }

private:
    FieldSpec field_;
    std::map<std::size_t, SparseVector> rows_;  // keyed by leading column, leading entry 1
};

}  // namespace cdgacalc::exact

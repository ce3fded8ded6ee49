#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "cdgacalc/exact/linalg.hpp"
#include "cdgacalc/graded/element.hpp"

namespace cdgacalc::graded {

/// Homogeneous relations in an AlgebraSpec.  `two_sided` generate an
/// ideal (two-sided when the algebra has a tensor block); `right`
/// generate the right ideal A*g, used for module quotients.
struct IdealSpec {
    std::vector<Element> two_sided;
    std::vector<Element> right;

    IdealSpec() = default;
    explicit IdealSpec(std::vector<Element> relations) : two_sided(std::move(relations)) {}

    /// Throws AlgebraError unless every relation is homogeneous and lives
    /// in `a`.
    void validate(const AlgebraSpec& a) const;
    bool empty() const { return two_sided.empty() && right.empty(); }
};

/// Degree-n slice of A/I: the normal monomials (the non-pivot columns of
/// the ideal slice's echelon form) and the projection onto them.
class QuotientSlice {
public:
    QuotientSlice(AlgebraSpec a, int degree, exact::SparseEchelon echelon);

    const AlgebraSpec& algebra() const { return alg_; }
    int degree() const { return degree_; }
    std::size_t dimension() const { return normal_.size(); }
    const std::vector<Monomial>& normal_monomials() const { return normal_; }
    const exact::SparseEchelon& ideal_echelon() const { return echelon_; }

    /// Coordinates of an element in the normal basis (degree-n part only).
    exact::Vector coordinates(const Element& u) const;
    /// The canonical representative of u modulo the ideal.
    Element normal_form(const Element& u) const;
    /// Element for a coordinate vector.
    Element element(const exact::Vector& coords) const;
    bool in_ideal(const Element& u) const;

    /// Sparse vector of u's degree-n part over the ambient basis.
    exact::SparseVector ambient_vector(const Element& u) const;

private:
    AlgebraSpec alg_;
    int degree_;
    exact::SparseEchelon echelon_;
    std::vector<Monomial> normal_;
    std::vector<std::size_t> normal_columns_;
    std::vector<std::ptrdiff_t> column_to_normal_;
};

QuotientSlice quotient_basis(const AlgebraSpec& a, const IdealSpec& ideal, int n);

/// Dimension of A/(A*I_sub) in degree n, where I_sub is the augmentation
/// ideal of the subalgebra generated by `sub_generators`.
std::size_t module_quotient_right(const AlgebraSpec& a, const std::vector<std::size_t>& sub_generators,
                                  int n);

using HilbertSeries = std::vector<std::size_t>;

HilbertSeries hilbert(const AlgebraSpec& a, int n_max);
HilbertSeries hilbert(const AlgebraSpec& a, const IdealSpec& ideal, int n_max);

/// Coefficientwise product of two series, truncated to the shorter length
/// of interest `n_max`.
HilbertSeries convolve(const HilbertSeries& a, const HilbertSeries& b, int n_max);

}  // namespace cdgacalc::graded

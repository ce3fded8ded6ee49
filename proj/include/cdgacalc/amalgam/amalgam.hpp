#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdgacalc/exact/linalg.hpp"
#include "cdgacalc/graded/ideal.hpp"

namespace cdgacalc::amalgam {

using exact::FieldSpec;
using exact::Scalar;
using exact::SparseVector;

struct BasisElement {
    std::string name;
    int degree = 0;
};

/// Finite-dimensional augmented graded algebra given by structure
/// constants.  basis[0] is the unit and the only element of degree 0.
class AugmentedAlgebra {
public:
    /// products[i][j] = e_i * e_j in basis coordinates.  Validates unit,
    /// degree-0 part, homogeneity and associativity on all triples.
    AugmentedAlgebra(FieldSpec field, std::vector<BasisElement> basis,
                     std::vector<std::vector<SparseVector>> products);

    /// A/I for a presented algebra.  The quotient must vanish in the top
    /// max-generator-degree slices below the truncation, which makes it
    /// finite-dimensional; throws InputError otherwise.
    static AugmentedAlgebra from_quotient(const graded::AlgebraSpec& a, const graded::IdealSpec& ideal);

    FieldSpec field() const { return field_; }
    std::size_t size() const { return basis_.size(); }
    int degree(std::size_t i) const { return basis_[i].degree; }
    const std::string& name(std::size_t i) const { return basis_[i].name; }
    const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i][j]; }
    SparseVector multiply(const SparseVector& u, const SparseVector& v) const;
    std::vector<std::size_t> dims() const;

    /// Present only for algebras built by from_quotient.
    const std::optional<graded::AlgebraSpec>& presentation() const { return presentation_; }
    /// Coordinates of an element of the presenting algebra.
    SparseVector coordinates(const graded::Element& u) const;
    /// Normal monomial behind basis element i (from_quotient only).
    const graded::Monomial& monomial(std::size_t i) const { return monomials_.at(i); }

private:
    FieldSpec field_;
    std::vector<BasisElement> basis_;
    std::vector<std::vector<SparseVector>> products_;
    std::optional<graded::AlgebraSpec> presentation_;
    std::vector<graded::Monomial> monomials_;
    std::vector<graded::QuotientSlice> slices_;
    std::vector<std::size_t> slice_offset_;
};

/// Degree-preserving algebra map C -> target, as images of C's basis.
struct AlgebraMap {
    std::vector<SparseVector> images;
};

/// Extends images of C's generators multiplicatively.  Both algebras must
/// come from from_quotient; images are elements of the target's
/// presenting algebra keyed by C-generator name.
AlgebraMap extend_map(const AugmentedAlgebra& c, const AugmentedAlgebra& target,
                      const std::map<std::string, graded::Element>& generator_images);

class AmalgamSpec {
public:
    /// Throws AlgebraError unless both maps are injective, unital,
    /// multiplicative and degree-preserving, and all fields agree.
    AmalgamSpec(AugmentedAlgebra a, AugmentedAlgebra b, AugmentedAlgebra c, AlgebraMap phi_a, AlgebraMap phi_b);

    const AugmentedAlgebra& a() const { return a_; }
    const AugmentedAlgebra& b() const { return b_; }
    const AugmentedAlgebra& c() const { return c_; }
    const AlgebraMap& phi_a() const { return phi_a_; }
    const AlgebraMap& phi_b() const { return phi_b_; }

    /// (B, phi_B) and (A, phi_A) exchanged.
    AmalgamSpec swapped() const;

private:
    AugmentedAlgebra a_, b_, c_;
    AlgebraMap phi_a_, phi_b_;
};

/// A letter of a free-product word: a positive-degree basis element of
/// factor 0 (A) or 1 (B).
struct Letter {
    int factor = 0;
    std::size_t index = 0;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Alternating words of degree n in the positive parts of A and B.
std::vector<Word> free_product_basis(const AugmentedAlgebra& a, const AugmentedAlgebra& b, int n);

struct AmalgamResult {
    std::vector<std::size_t> dims;
    /// Words whose images form a basis of each degree.
    std::vector<std::vector<Word>> representatives;
};

/// Hilbert series of A *_C B through degree n_max, computed as a quotient
/// of the tensor algebra on A+ and B+ one degree at a time.
AmalgamResult amalgam_hilbert(const AmalgamSpec& spec, int n_max);

std::string word_string(const AmalgamSpec& spec, const Word& w);

namespace reference {
/// Direct computation: span of u*(phi_A(c) - phi_B(c))*v inside the free
/// product.  Exponential in n; for cross-checking only.
std::vector<std::size_t> amalgam_hilbert(const AmalgamSpec& spec, int n_max);
}  // namespace reference

}  // namespace cdgacalc::amalgam

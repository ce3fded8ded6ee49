#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cdgacalc/exact/scalar.hpp"
#include "cdgacalc/graded/algebra.hpp"

namespace cdgacalc::graded {

using exact::Scalar;

/// Product of two basis monomials: coeff * mono.  A zero coefficient means
/// the product vanishes; `truncated` means it lies above the truncation.
struct MonomialProduct {
    Scalar coeff;
    Monomial mono;
    bool truncated = false;
};

MonomialProduct multiply(const AlgebraSpec& a, const Monomial& u, const Monomial& v);

/// Sparse element of an AlgebraSpec.  Terms are kept in graded order and
/// never store zero coefficients.
class Element {
public:
    explicit Element(AlgebraSpec algebra) : alg_(std::move(algebra)) {}

    static Element one(const AlgebraSpec& a);
    static Element constant(const AlgebraSpec& a, const Scalar& c);
    static Element generator(const AlgebraSpec& a, std::string_view name);
    static Element generator(const AlgebraSpec& a, std::size_t index);
    static Element monomial(const AlgebraSpec& a, const Monomial& m, const Scalar& c);

    const AlgebraSpec& algebra() const { return alg_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool truncation_lost() const { return lossy_; }
    void mark_truncation_lost() { lossy_ = true; }

    /// Degree if every term has the same degree (zero counts as homogeneous
    /// of any degree and reports nullopt).
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    Scalar coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Scalar& c);

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Scalar& c);
    Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Scalar& c) { return a *= c; }
    friend Element operator*(const Scalar& c, Element a) { return a *= c; }
    /// Algebra product; throws AlgebraError for elements of different algebras.
    friend Element operator*(const Element& a, const Element& b);

    /// Compares terms only (not the truncation flag).
    friend bool operator==(const Element& a, const Element& b);

    /// Canonical text, e.g. "a*b^2 - 3/2*e*g" or "0"; parseable back.
    std::string to_string() const;

private:
    void require_same_algebra(const Element& other) const;

    AlgebraSpec alg_;
    std::map<Monomial, Scalar> terms_;
    bool lossy_ = false;
};

Element multiply(const Element& u, const Element& v);

/// Maps an element of a tensor factor into the product algebra.
/// `offset` is the index of the factor's first generator in the product.
Element embed(const Element& u, const AlgebraSpec& target, std::size_t offset);

}  // namespace cdgacalc::graded

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdgacalc/exact/matrix.hpp"
#include "cdgacalc/graded/element.hpp"

namespace cdgacalc::cdga {

using graded::AlgebraSpec;
using graded::Element;
using graded::Monomial;
using exact::Scalar;

/// A degree +1 derivation given on generators.  Missing generators map to
/// zero.  Construction rejects images of the wrong degree or algebra.
class Differential {
public:
    explicit Differential(AlgebraSpec a);
    Differential(AlgebraSpec a, const std::map<std::string, Element>& images);

    const AlgebraSpec& algebra() const { return alg_; }
    const Element& image(std::size_t generator) const { return images_.at(generator); }

    /// Extends to all of the algebra by d(uv) = du*v + (-1)^|u| u*dv.
    Element apply(const Element& u) const;
    Element apply(const Monomial& m) const;

private:
    AlgebraSpec alg_;
    std::vector<Element> images_;
};

Element extend_leibniz(const Differential& d, const Element& u);

struct DSquaredViolation {
    std::string generator;
    Element value;
};

/// Checks d(d(g)) = 0 for every generator with |g| + 2 <= N.  Returns the
/// first violation in declaration order.
std::optional<DSquaredViolation> check_d_squared(const Differential& d);

/// Matrix of d: C^n -> C^{n+1} in the monomial bases (rows index degree
/// n+1).  Requires n + 1 <= N.
exact::ExactMatrix differential_matrix(const Differential& d, int n);

}  // namespace cdgacalc::cdga

#include "cdgacalc/graded/ideal.hpp"

#include <algorithm>

#include "cdgacalc/errors.hpp"

namespace cdgacalc::graded {

void IdealSpec::validate(const AlgebraSpec& a) const
{
    for (const auto* list : {&two_sided, &right}) {
        for (const auto& r : *list) {
            if (!(r.algebra() == a))
                throw AlgebraError("relation belongs to a different algebra");
            if (!r.is_homogeneous())
                throw AlgebraError("relation " + r.to_string() + " is not homogeneous");
        }
    }
}

QuotientSlice::QuotientSlice(AlgebraSpec a, int degree, exact::SparseEchelon echelon)
    : alg_(std::move(a)), degree_(degree), echelon_(std::move(echelon))
{
    const auto& mons = alg_.basis(degree_).monomials;
    column_to_normal_.assign(mons.size(), -1);
    for (std::size_t c = 0; c < mons.size(); ++c) {
        if (echelon_.is_pivot(c))
            continue;
        column_to_normal_[c] = static_cast<std::ptrdiff_t>(normal_.size());
        normal_.push_back(mons[c]);
        normal_columns_.push_back(c);
    }
}

exact::SparseVector QuotientSlice::ambient_vector(const Element& u) const
{
    if (!(u.algebra() == alg_))
        throw AlgebraError("element belongs to a different algebra");
    const auto& basis = alg_.basis(degree_);
    exact::SparseVector v;
    for (const auto& [m, c] : u.terms()) {
        if (m.degree() != degree_)
            throw AlgebraError("term " + alg_.monomial_string(m) + " is not of degree " + std::to_string(degree_));
        v.emplace_back(*basis.position(m), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

exact::Vector QuotientSlice::coordinates(const Element& u) const
{
    exact::Vector out = exact::zero_vector(alg_.field(), normal_.size());
    for (const auto& [c, s] : echelon_.reduce(ambient_vector(u)))
        out[static_cast<std::size_t>(column_to_normal_[c])] = s;
    return out;
}

Element QuotientSlice::normal_form(const Element& u) const
{
    return element(coordinates(u));
}

Element QuotientSlice::element(const exact::Vector& coords) const
{
    if (coords.size() != normal_.size())
        throw AlgebraError("coordinate vector has the wrong length");
    Element out(alg_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        out.add_term(normal_[i], coords[i]);
    return out;
}

bool QuotientSlice::in_ideal(const Element& u) const
{
    return echelon_.contains(ambient_vector(u));
}

QuotientSlice quotient_basis(const AlgebraSpec& a, const IdealSpec& ideal, int n)
{
    ideal.validate(a);
    const auto& target = a.basis(n);  // range check
    (void)target;
    exact::SparseEchelon echelon(a.field());
    QuotientSlice probe(a, n, exact::SparseEchelon(a.field()));

    auto add = [&](const Element& e) {
        if (!e.is_zero())
            echelon.insert(probe.ambient_vector(e));
    };

    for (const auto& r : ideal.two_sided) {
        const auto d = r.degree();
        if (!d || *d > n)
            continue;
        if (!a.has_tensor_block()) {
            for (const auto& m : a.basis(n - *d).monomials)
                add(Element::monomial(a, m, Scalar::one(a.field())) * r);
            continue;
        }
        for (int left = 0; left <= n - *d; ++left) {
            for (const auto& m : a.basis(left).monomials) {
                const Element mr = Element::monomial(a, m, Scalar::one(a.field())) * r;
                if (mr.is_zero())
                    continue;
                for (const auto& m2 : a.basis(n - *d - left).monomials)
                    add(mr * Element::monomial(a, m2, Scalar::one(a.field())));
            }
        }
    }
    for (const auto& g : ideal.right) {
        const auto d = g.degree();
        if (!d || *d > n)
            continue;
        for (const auto& m : a.basis(n - *d).monomials)
            add(Element::monomial(a, m, Scalar::one(a.field())) * g);
    }
    return QuotientSlice(a, n, std::move(echelon));
}

std::size_t module_quotient_right(const AlgebraSpec& a, const std::vector<std::size_t>& sub_generators, int n)
{
    IdealSpec ideal;
    for (auto g : sub_generators) {
        if (g >= a.generators().size())
            throw InputError("sub-generator index out of range");
        if (a.generators()[g].degree <= a.truncation())
            ideal.right.push_back(Element::generator(a, g));
    }
    return quotient_basis(a, ideal, n).dimension();
}

HilbertSeries hilbert(const AlgebraSpec& a, int n_max)
{
    if (n_max > a.truncation())
        throw DegreeError("series requested beyond the truncation");
    HilbertSeries out;
    for (int n = 0; n <= n_max; ++n)
        out.push_back(a.dimension(n));
    return out;
}

HilbertSeries hilbert(const AlgebraSpec& a, const IdealSpec& ideal, int n_max)
{
    if (n_max > a.truncation())
        throw DegreeError("series requested beyond the truncation");
    HilbertSeries out;
    for (int n = 0; n <= n_max; ++n)
        out.push_back(ideal.empty() ? a.dimension(n) : quotient_basis(a, ideal, n).dimension());
    return out;
}

HilbertSeries convolve(const HilbertSeries& a, const HilbertSeries& b, int n_max)
{
    HilbertSeries out(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace cdgacalc::graded

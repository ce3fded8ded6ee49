#include "cdgacalc/cdga/differential.hpp"

#include "cdgacalc/errors.hpp"

namespace cdgacalc::cdga {

Differential::Differential(AlgebraSpec a) : alg_(a), images_(a.generators().size(), Element(a)) {}

Differential::Differential(AlgebraSpec a, const std::map<std::string, Element>& images) : Differential(a)
{
    for (const auto& [name, image] : images) {
        const std::size_t g = alg_.index_of(name);
        if (!(image.algebra() == alg_))
            throw AlgebraError("image of '" + name + "' belongs to a different algebra");
        const int want = alg_.generators()[g].degree + 1;
        for (const auto& [m, c] : image.terms())
            if (m.degree() != want)
                throw AlgebraError("d(" + name + ") must be homogeneous of degree " + std::to_string(want) +
                                   ", found term " + alg_.monomial_string(m) + " of degree " +
                                   std::to_string(m.degree()));
        images_[g] = image;
    }
}

Element Differential::apply(const Monomial& m) const
{
    const exact::FieldSpec field = alg_.field();
    Element out(alg_);
    const auto& w = m.letters();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size();) {
        const auto& gen = alg_.generators()[w[i]];
        std::size_t j = i + 1;
        if (gen.flavor == graded::Flavor::divided_power)
            while (j < w.size() && w[j] == w[i])
                ++j;

        Element df = images_[w[i]];
        if (j - i > 1)  // d(x_[r]) = dx * x_[r-1]
            df = df * Element::monomial(alg_, alg_.make_monomial(std::vector<std::uint16_t>(j - i - 1, w[i])),
                                        Scalar::one(field));
        if (!df.is_zero() || df.truncation_lost()) {
            Element prefix = Element::monomial(
                alg_, alg_.make_monomial(std::vector<std::uint16_t>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i))),
                Scalar::one(field));
            Element suffix = Element::monomial(
                alg_, alg_.make_monomial(std::vector<std::uint16_t>(w.begin() + static_cast<std::ptrdiff_t>(j), w.end())),
                Scalar::one(field));
            Element term = prefix * df * suffix;
            if (prefix_degree % 2)
                term = -term;
            out += term;
        }
        prefix_degree += gen.degree * static_cast<int>(j - i);
        i = j;
    }
    if (m.degree() + 1 > alg_.truncation())
        out.mark_truncation_lost();
    return out;
}

Element Differential::apply(const Element& u) const
{
    if (!(u.algebra() == alg_))
        throw AlgebraError("element belongs to a different algebra");
    Element out(alg_);
    for (const auto& [m, c] : u.terms())
        out += apply(m) * c;
    if (u.truncation_lost())
        out.mark_truncation_lost();
    return out;
}

Element extend_leibniz(const Differential& d, const Element& u) { return d.apply(u); }

std::optional<DSquaredViolation> check_d_squared(const Differential& d)
{
    const auto& a = d.algebra();
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
        const auto& gen = a.generators()[g];
        if (gen.degree + 2 > a.truncation())
            continue;
        Element dd = d.apply(d.image(g));
        if (!dd.is_zero())
            return DSquaredViolation{gen.name, std::move(dd)};
    }
    return std::nullopt;
}

exact::ExactMatrix differential_matrix(const Differential& d, int n)
{
    const auto& a = d.algebra();
    if (n < 0 || n + 1 > a.truncation())
        throw DegreeError("d_" + std::to_string(n) + " needs truncation at least " + std::to_string(n + 1));
    const auto& src = a.basis(n);
    const auto& tgt = a.basis(n + 1);
    exact::ExactMatrix m(a.field(), tgt.monomials.size(), src.monomials.size());
    for (std::size_t c = 0; c < src.monomials.size(); ++c) {
        const Element img = d.apply(src.monomials[c]);
        for (const auto& [mono, coeff] : img.terms())
            m(*tgt.position(mono), c) = coeff;
    }
    return m;
}

}  // namespace cdgacalc::cdga

#include <algorithm>
#include <map>

#include "cdgacalc/amalgam/amalgam.hpp"
#include "cdgacalc/errors.hpp"

namespace cdgacalc::amalgam {

namespace {

SparseVector from_map(const std::map<std::size_t, Scalar>& acc)
{
    SparseVector out;
    for (const auto& [i, s] : acc)
        if (!s.is_zero())
            out.emplace_back(i, s);
    return out;
}

}  // namespace

AugmentedAlgebra::AugmentedAlgebra(FieldSpec field, std::vector<BasisElement> basis,
                                   std::vector<std::vector<SparseVector>> products)
    : field_(field), basis_(std::move(basis)), products_(std::move(products))
{
    const std::size_t n = basis_.size();
    if (n == 0 || basis_[0].degree != 0)
        throw AlgebraError("augmented algebra needs the unit as basis element 0");
    for (std::size_t i = 1; i < n; ++i)
        if (basis_[i].degree <= 0)
            throw AlgebraError("degree-0 part must be one-dimensional and degrees non-negative");
    if (products_.size() != n)
        throw AlgebraError("structure constant table has the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (products_[i].size() != n)
            throw AlgebraError("structure constant table has the wrong size");
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, s] : products_[i][j]) {
                if (k >= n)
                    throw AlgebraError("structure constant index out of range");
                if (basis_[k].degree != basis_[i].degree + basis_[j].degree)
                    throw AlgebraError("product " + basis_[i].name + "*" + basis_[j].name + " is not homogeneous");
            }
        }
    }
    const Scalar one = Scalar::one(field_);
    for (std::size_t i = 0; i < n; ++i) {
        const SparseVector ei{{i, one}};
        if (!(products_[0][i] == ei) || !(products_[i][0] == ei))
            throw AlgebraError("basis element 0 is not a two-sided unit");
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t k = 1; k < n; ++k) {
                const SparseVector left = multiply(products_[i][j], {{k, one}});
                const SparseVector right = multiply({{i, one}}, products_[j][k]);
                if (!(left == right))
                    throw AlgebraError("multiplication is not associative on (" + basis_[i].name + ", " +
                                       basis_[j].name + ", " + basis_[k].name + ")");
            }
}

SparseVector AugmentedAlgebra::multiply(const SparseVector& u, const SparseVector& v) const
{
    std::map<std::size_t, Scalar> acc;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v)
            for (const auto& [k, c] : products_[i][j]) {
                auto [it, fresh] = acc.try_emplace(k, a * b * c);
                if (!fresh)
                    it->second += a * b * c;
            }
    return from_map(acc);
}

std::vector<std::size_t> AugmentedAlgebra::dims() const
{
    int top = 0;
    for (const auto& b : basis_)
        top = std::max(top, b.degree);
    std::vector<std::size_t> out(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& b : basis_)
        ++out[static_cast<std::size_t>(b.degree)];
    return out;
}

AugmentedAlgebra AugmentedAlgebra::from_quotient(const graded::AlgebraSpec& a, const graded::IdealSpec& ideal)
{
    const int top = a.truncation();
    int max_gen = 1;
    for (const auto& g : a.generators())
        max_gen = std::max(max_gen, g.degree);

    std::vector<graded::QuotientSlice> slices;
    for (int n = 0; n <= top; ++n)
        slices.push_back(graded::quotient_basis(a, ideal, n));
    for (int n = std::max(1, top - max_gen + 1); n <= top; ++n)
        if (slices[static_cast<std::size_t>(n)].dimension() != 0)
            throw InputError("presented algebra is not finite-dimensional below its truncation " +
                             std::to_string(top) + " (degree " + std::to_string(n) + " survives)");
    if (slices[0].dimension() != 1)
        throw InputError("presented algebra has no unit (the ideal contains a constant)");

    std::vector<BasisElement> basis;
    std::vector<graded::Monomial> monomials;
    std::vector<std::size_t> offset;
    for (const auto& s : slices) {
        offset.push_back(basis.size());
        for (const auto& m : s.normal_monomials()) {
            basis.push_back({a.monomial_string(m), m.degree()});
            monomials.push_back(m);
        }
    }

    const Scalar one = Scalar::one(a.field());
    std::vector<std::vector<SparseVector>> products(basis.size(), std::vector<SparseVector>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const int d = basis[i].degree + basis[j].degree;
            if (d > top)
                continue;
            const graded::Element p = graded::Element::monomial(a, monomials[i], one) *
                                      graded::Element::monomial(a, monomials[j], one);
            const auto& slice = slices[static_cast<std::size_t>(d)];
            const auto coords = slice.coordinates(p);
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (!coords[k].is_zero())
                    products[i][j].emplace_back(offset[static_cast<std::size_t>(d)] + k, coords[k]);
        }

    AugmentedAlgebra out(a.field(), std::move(basis), std::move(products));
    out.presentation_ = a;
    out.monomials_ = std::move(monomials);
    out.slices_ = std::move(slices);
    out.slice_offset_ = std::move(offset);
    return out;
}

SparseVector AugmentedAlgebra::coordinates(const graded::Element& u) const
{
    if (!presentation_)
        throw AlgebraError("algebra has no presentation");
    std::map<int, graded::Element> parts;
    for (const auto& [m, c] : u.terms()) {
        if (m.degree() >= static_cast<int>(slices_.size()))
            continue;  // vanishes in the quotient
        auto [it, fresh] = parts.try_emplace(m.degree(), graded::Element(*presentation_));
        it->second.add_term(m, c);
    }
    SparseVector out;
    for (const auto& [d, part] : parts) {
        const auto coords = slices_[static_cast<std::size_t>(d)].coordinates(part);
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!coords[k].is_zero())
                out.emplace_back(slice_offset_[static_cast<std::size_t>(d)] + k, coords[k]);
    }
    return out;
}

AlgebraMap extend_map(const AugmentedAlgebra& c, const AugmentedAlgebra& target,
                      const std::map<std::string, graded::Element>& generator_images)
{
    if (!c.presentation() || !target.presentation())
        throw AlgebraError("extend_map needs presented algebras");
    const auto& cp = *c.presentation();
    std::vector<SparseVector> letter_images(cp.generators().size());
    for (std::size_t g = 0; g < cp.generators().size(); ++g) {
        auto it = generator_images.find(cp.generators()[g].name);
        if (it == generator_images.end())
            throw InputError("no image given for generator '" + cp.generators()[g].name + "'");
        if (!(it->second.algebra() == *target.presentation()))
            throw AlgebraError("image of '" + it->first + "' is not in the target algebra");
        letter_images[g] = target.coordinates(it->second);
    }
    for (const auto& [name, img] : generator_images)
        cp.index_of(name);  // rejects unknown names

    AlgebraMap map;
    const Scalar one = Scalar::one(c.field());
    for (std::size_t i = 0; i < c.size(); ++i) {
        SparseVector acc{{0, one}};
        const auto& letters = c.monomial(i).letters();
        for (std::size_t k = 0; k < letters.size(); ++k) {
            if (cp.generators()[letters[k]].flavor == graded::Flavor::divided_power)
                throw InputError("divided-power generators are not supported in embedded algebras");
            acc = target.multiply(acc, letter_images[letters[k]]);
        }
        map.images.push_back(std::move(acc));
    }
    return map;
}

namespace {

void validate_map(const AugmentedAlgebra& c, const AugmentedAlgebra& t, const AlgebraMap& phi, const char* label)
{
    const std::string name(label);
    if (!(c.field() == t.field()))
        throw AlgebraError(name + ": algebras over different fields");
    if (phi.images.size() != c.size())
        throw AlgebraError(name + ": one image per basis element of C is required");
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& [k, s] : phi.images[i])
            if (t.degree(k) != c.degree(i))
                throw AlgebraError(name + " does not preserve degree on " + c.name(i));
    const Scalar one = Scalar::one(c.field());
    if (!(phi.images[0] == SparseVector{{0, one}}))
        throw AlgebraError(name + " is not unital");
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) {
            std::map<std::size_t, Scalar> acc;
            for (const auto& [k, s] : c.product(i, j))
                for (const auto& [l, t_] : phi.images[k]) {
                    auto [it, fresh] = acc.try_emplace(l, s * t_);
                    if (!fresh)
                        it->second += s * t_;
                }
            if (!(from_map(acc) == t.multiply(phi.images[i], phi.images[j])))
                throw AlgebraError(name + " is not multiplicative on (" + c.name(i) + ", " + c.name(j) + ")");
        }
    exact::SparseEchelon ech(c.field());
    for (const auto& img : phi.images)
        ech.insert(img);
    if (ech.rank() != c.size())
        throw AlgebraError(name + " is not injective");
}

}  // namespace

AmalgamSpec::AmalgamSpec(AugmentedAlgebra a, AugmentedAlgebra b, AugmentedAlgebra c, AlgebraMap phi_a,
                         AlgebraMap phi_b)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), phi_a_(std::move(phi_a)), phi_b_(std::move(phi_b))
{
    validate_map(c_, a_, phi_a_, "phi_A");
    validate_map(c_, b_, phi_b_, "phi_B");
}

AmalgamSpec AmalgamSpec::swapped() const
{
    return AmalgamSpec(b_, a_, c_, phi_b_, phi_a_);
}

}  // namespace cdgacalc::amalgam

#include "cdgacalc/cdga/constructions.hpp"

#include <map>
#include <set>

#include "cdgacalc/errors.hpp"

namespace cdgacalc::cdga {

Differential duality_differential(const AlgebraSpec& a, const WhiteheadTable& table)
{
    const auto& gens = a.generators();
    std::map<std::pair<std::size_t, std::size_t>, Element> bracket;

    for (const auto& e : table.entries) {
        const std::size_t i = a.index_of(e.left);
        const std::size_t j = a.index_of(e.right);
        if (!(e.value.algebra() == a))
            throw AlgebraError("bracket value belongs to a different algebra");
        const int want = gens[i].degree + gens[j].degree - 1;
        for (const auto& [m, c] : e.value.terms())
            if (m.length() != 1 || m.degree() != want)
                throw AlgebraError("[" + e.left + "," + e.right + "] must be a combination of generators of degree " +
                                   std::to_string(want));
        auto [it, fresh] = bracket.try_emplace({i, j}, e.value);
        if (!fresh && !(it->second == e.value))
            throw AlgebraError("bracket [" + e.left + "," + e.right + "] is given twice with different values");
    }
    // Fill in missing orientations by graded symmetry.
    const auto given = bracket;
    for (const auto& [key, v] : given) {
        const auto [i, j] = key;
        if (i == j || given.count({j, i}))
            continue;
        const bool odd = (gens[i].degree * gens[j].degree) % 2 != 0;
        bracket.emplace(std::make_pair(j, i), odd ? -v : v);
    }

    std::map<std::string, Element> images;
    for (const auto& [key, v] : bracket) {
        const auto [i, j] = key;
        const Element product = Element::generator(a, i) * Element::generator(a, j);
        for (const auto& [m, c] : v.terms()) {
            const std::string& target = gens[m.letters().front()].name;
            auto [it, fresh] = images.try_emplace(target, Element(a));
            it->second += product * c;
        }
    }
    return Differential(a, images);
}

std::pair<AlgebraSpec, Differential> quotient_cdga(const Differential& d, const std::vector<std::string>& generators)
{
    const AlgebraSpec& a = d.algebra();
    std::set<std::size_t> removed;
    for (const auto& name : generators)
        removed.insert(a.index_of(name));

    auto touches = [&](const Monomial& m) {
        for (auto l : m.letters())
            if (removed.count(l))
                return true;
        return false;
    };

    for (auto g : removed)
        for (const auto& [m, c] : d.image(g).terms())
            if (!touches(m))
                throw AlgebraError("ideal is not closed under d: d(" + a.generators()[g].name + ") = " +
                                   d.image(g).to_string());

    std::vector<graded::BlockSpec> blocks;
    std::vector<std::uint16_t> remap(a.generators().size(), 0);
    std::uint16_t next = 0;
    for (std::size_t b = 0; b < a.blocks().size(); ++b) {
        graded::BlockSpec block{a.blocks()[b].mode, {}};
        for (std::size_t k = 0; k < a.blocks()[b].generators.size(); ++k) {
            const std::size_t g = a.block_begin(b) + k;
            if (removed.count(g))
                continue;
            remap[g] = next++;
            block.generators.push_back(a.generators()[g]);
        }
        if (!block.generators.empty())
            blocks.push_back(std::move(block));
    }
    AlgebraSpec q = AlgebraSpec::from_blocks(a.field(), std::move(blocks), a.truncation());

    std::map<std::string, Element> images;
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
        if (removed.count(g))
            continue;
        Element img(q);
        for (const auto& [m, c] : d.image(g).terms()) {
            if (touches(m))
                continue;
            std::vector<std::uint16_t> letters;
            for (auto l : m.letters())
                letters.push_back(remap[l]);
            img.add_term(q.make_monomial(std::move(letters)), c);
        }
        images.emplace(a.generators()[g].name, std::move(img));
    }
    return {q, Differential(q, images)};
}

PresentationVerdict compare_presentation(const CohomologyReport& report, const PresentationTarget& target, int n_max)
{
    if (n_max > report.max_degree())
        throw DegreeError("comparison range exceeds the report");
    if (target.series.size() < static_cast<std::size_t>(n_max) + 1)
        throw InputError("target series does not cover the comparison range");

    PresentationVerdict verdict;
    const auto betti = report.betti();
    for (int n = 0; n <= n_max; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        if (betti[idx] != target.series[idx]) {
            verdict.pass = false;
            verdict.first_mismatch = n;
            verdict.message = "betti(" + std::to_string(n) + ") = " + std::to_string(betti[idx]) + ", expected " +
                              std::to_string(target.series[idx]);
            return verdict;
        }
    }
    if (target.candidates.empty())
        return verdict;

    const AlgebraSpec& a = report.algebra();
    for (const auto& c : target.candidates) {
        if (!c.is_homogeneous() || c.is_zero())
            throw InputError("candidate generators must be nonzero and homogeneous");
        if (!report.differential().apply(c).is_zero())
            throw InputError("candidate " + c.to_string() + " is not a cocycle");
    }

    // spans[n] = products of candidates of degree n, reduced to a basis.
    std::vector<std::vector<Element>> spans(static_cast<std::size_t>(n_max) + 1);
    spans[0].push_back(Element::one(a));
    for (int n = 1; n <= n_max; ++n) {
        exact::SparseEchelon classes(a.field());
        for (const auto& c : target.candidates) {
            const int dc = *c.degree();
            if (dc > n)
                continue;
            for (const auto& s : spans[static_cast<std::size_t>(n - dc)]) {
                Element p = c * s;
                if (classes.insert(exact::to_sparse(report.express_class(p, n))))
                    spans[static_cast<std::size_t>(n)].push_back(std::move(p));
            }
        }
        if (spans[static_cast<std::size_t>(n)].size() != betti[static_cast<std::size_t>(n)]) {
            verdict.pass = false;
            verdict.first_mismatch = n;
            verdict.message = "candidates span " + std::to_string(spans[static_cast<std::size_t>(n)].size()) +
                              " of " + std::to_string(betti[static_cast<std::size_t>(n)]) + " classes in degree " +
                              std::to_string(n);
            return verdict;
        }
    }
    return verdict;
}

}  // namespace cdgacalc::cdga

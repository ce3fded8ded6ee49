#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "cdgacalc/amalgam/amalgam.hpp"
#include "cdgacalc/cdga/cohomology.hpp"
#include "cdgacalc/exact/linalg.hpp"
#include "cdgacalc/graded/ideal.hpp"
#include "cdgacalc/graded/parser.hpp"
#include "cdgacalc/koszul/koszul.hpp"
#include "cdgacalc/scenarios/scenarios.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cdgacalc;
using cdga::Differential;
using exact::FieldSpec;
using exact::Scalar;
using graded::AlgebraSpec;
using graded::Element;
using graded::Flavor;
using testsupport::random_degree;
using testsupport::random_element;

namespace {

constexpr int cases = 200;

// The differential of a cdga preset, rebuilt from its spec document.
Differential preset_differential(const std::string& name, int truncation, const std::string& k = "1")
{
    const auto& doc = scenarios::find_preset(name).source;
    std::vector<graded::Generator> gens;
    for (const auto& g : doc["generators"])
        gens.push_back({g["name"].get<std::string>(), g["degree"].get<int>()});
    const auto a = AlgebraSpec::commutative(FieldSpec::rationals(), gens, truncation);
    graded::Parameters params{{"k", graded::parse_scalar(a.field(), k)}};
    std::map<std::string, Element> images;
    for (const auto& [g, expr] : doc["differential"].items())
        images.emplace(g, graded::parse_element(a, expr.get<std::string>(), params));
    return Differential(a, images);
}

const std::vector<std::string> cdga_presets{"symp_m_model", "symp_mtilde_model", "relative_model", "im_emb_model",
                                            "emb_model"};

AlgebraSpec random_gc_algebra(std::mt19937_64& rng, FieldSpec field, int truncation, bool allow_divided)
{
    const int n = random_degree(rng, 1, 4);
    std::vector<graded::Generator> gens;
    for (int i = 0; i < n; ++i) {
        graded::Generator g{"x" + std::to_string(i), random_degree(rng, 1, 4)};
        if (rng() % 4 == 0)
            g.flavor = Flavor::exterior;
        else if (allow_divided && g.degree % 2 == 0 && rng() % 2 == 0)
            g.flavor = Flavor::divided_power;
        gens.push_back(g);
    }
    return AlgebraSpec::commutative(field, gens, truncation);
}

int sign(int p, int q)
{
    return (p * q) % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("d^2 = 0 and the signed Leibniz rule on every cdga preset")
{
    std::mt19937_64 rng(20261017);
    int checked = 0;
    for (const auto& name : cdga_presets) {
        const auto d = preset_differential(name, 9, "7/2");
        const auto& a = d.algebra();
        for (int s = 0; s < cases / static_cast<int>(cdga_presets.size()) + 1; ++s) {
            const int p = random_degree(rng, 0, 8);
            const int q = random_degree(rng, 0, 8 - p);
            const Element u = random_element(a, p, rng, 3);
            const Element v = random_element(a, q, rng, 3);
            CHECK(d.apply(d.apply(u)).is_zero());
            Element rhs = d.apply(u) * v + Scalar::from_int(a.field(), sign(p, 1)) * (u * d.apply(v));
            CHECK(d.apply(u * v) == rhs);
            ++checked;
        }
    }
    CHECK(checked >= cases);
}

TEST_CASE("d^2 = 0 on the Koszul preset, sampled")
{
    koszul::KoszulComplexSpec spec;
    spec.field = FieldSpec::rationals();
    spec.ring_generators = {{"z", 2}, {"r", 2}, {"s", 2}};
    spec.ring_relations = {"z*r - z*s"};
    spec.exterior = {{"alpha", -1, 2, "z"}, {"beta", -1, 4, "r^2"}, {"gamma", -1, 4, "s^2"},
                     {"delta", -2, 6, "alpha*r^2 - alpha*s^2"}};
    const koszul::KoszulComplex k(spec, 8);
    CHECK_FALSE(k.check_d_squared(77, cases));
}

TEST_CASE("products are graded commutative")
{
    std::mt19937_64 rng(1);
    for (int s = 0; s < cases; ++s) {
        const auto a = random_gc_algebra(rng, testsupport::random_field(rng), 8, true);
        const int p = random_degree(rng, 0, 8);
        const int q = random_degree(rng, 0, 8 - p);
        const Element u = random_element(a, p, rng);
        const Element v = random_element(a, q, rng);
        CHECK(u * v == Scalar::from_int(a.field(), sign(p, q)) * (v * u));
    }
}

TEST_CASE("cup products are graded commutative")
{
    std::mt19937_64 rng(2);
    std::vector<cdga::CohomologyReport> reports;
    for (const auto& name : cdga_presets)
        reports.push_back(cdga::cohomology(preset_differential(name, 11), 10));
    int checked = 0;
    while (checked < cases) {
        const auto& r = reports[rng() % reports.size()];
        const int p = random_degree(rng, 0, 10);
        const int q = random_degree(rng, 0, 10 - p);
        if (r.at(p).betti == 0 || r.at(q).betti == 0)
            continue;
        const auto i = rng() % r.at(p).betti;
        const auto j = rng() % r.at(q).betti;
        auto lhs = cdga::cup(r, p, i, q, j);
        auto rhs = cdga::cup(r, q, j, p, i);
        for (auto& x : rhs)
            x = x * Scalar::from_int(x.field(), sign(p, q));
        CHECK(lhs == rhs);
        ++checked;
    }
}

TEST_CASE("rank-nullity and agreement with an independent elimination")
{
    std::mt19937_64 rng(3);
    for (int s = 0; s < cases; ++s) {
        const auto field = testsupport::random_field(rng);
        const auto rows = static_cast<std::size_t>(random_degree(rng, 1, 9));
        const auto cols = static_cast<std::size_t>(random_degree(rng, 1, 9));
        const auto m = testsupport::random_matrix(field, rows, cols, rng);
        const auto r = exact::rref(m);
        const auto kernel = exact::kernel_basis(m);
        CHECK(r.rank + kernel.size() == cols);
        for (const auto& k : kernel)
            for (const auto& x : m.apply(k))
                CHECK(x.is_zero());
        CHECK(r.reduced == exact::reference::rref(m).reduced);

        std::size_t oracle_rank = 0;
        if (field.is_rational()) {
            std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    q[i][j] = m(i, j).rational();
            oracle_rank = testsupport::oracle::rank_rational(q);
        } else {
            std::vector<std::vector<std::int64_t>> z(rows, std::vector<std::int64_t>(cols));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    z[i][j] = m(i, j).residue();
            oracle_rank = testsupport::oracle::rank_mod(z, field.characteristic());
        }
        CHECK(r.rank == oracle_rank);
    }
}

TEST_CASE("quotient dimensions do not depend on generator order")
{
    std::mt19937_64 rng(4);
    for (int s = 0; s < cases; ++s) {
        const auto field = testsupport::random_field(rng);
        const auto a = random_gc_algebra(rng, field, 7, false);
        std::vector<std::string> relations;
        const int nrel = random_degree(rng, 1, 3);
        for (int i = 0; i < nrel; ++i) {
            const Element r = random_element(a, random_degree(rng, 1, 6), rng);
            if (!r.is_zero())
                relations.push_back(r.to_string());
        }
        auto gens = a.generators();
        std::shuffle(gens.begin(), gens.end(), rng);
        const auto b = AlgebraSpec::commutative(field, gens, 7);
        graded::IdealSpec ia, ib;
        for (const auto& r : relations) {
            ia.two_sided.push_back(graded::parse_element(a, r));
            ib.two_sided.push_back(graded::parse_element(b, r));
        }
        CHECK(graded::hilbert(a, ia, 7) == graded::hilbert(b, ib, 7));
    }
}

TEST_CASE("amalgams are symmetric in their factors")
{
    std::mt19937_64 rng(5);
    for (int s = 0; s < cases; ++s) {
        const auto field = testsupport::random_field(rng);
        const int dc = random_degree(rng, 1, 2);
        auto factor = [&](const std::string& prefix) {
            std::vector<graded::Generator> gens{{prefix + "0", dc, Flavor::exterior}};
            const int extra = random_degree(rng, 0, 2);
            for (int i = 1; i <= extra; ++i)
                gens.push_back({prefix + std::to_string(i), random_degree(rng, 1, 2), Flavor::exterior});
            int top = 0;
            for (const auto& g : gens)
                top += g.degree;
            return amalgam::AugmentedAlgebra::from_quotient(AlgebraSpec::commutative(field, gens, top + 2), {});
        };
        const auto a = factor("x");
        const auto b = factor("y");
        const auto c = amalgam::AugmentedAlgebra::from_quotient(
            AlgebraSpec::commutative(field, {{"c", dc, Flavor::exterior}}, dc + dc), {});
        auto image = [&](const amalgam::AugmentedAlgebra& t) {
            const auto& pa = *t.presentation();
            Element e = Element::generator(pa, std::size_t{0});
            // Sums of even exterior generators do not square to zero.
            for (std::size_t g = 1; dc % 2 == 1 && g < pa.generators().size(); ++g)
                if (pa.generators()[g].degree == dc && rng() % 2 == 0)
                    e += Scalar::from_int(field, random_degree(rng, 1, 3)) * Element::generator(pa, g);
            return e;
        };
        const amalgam::AmalgamSpec spec(a, b, c, amalgam::extend_map(c, a, {{"c", image(a)}}),
                                        amalgam::extend_map(c, b, {{"c", image(b)}}));
        const auto forward = amalgam::amalgam_hilbert(spec, 5).dims;
        CHECK(amalgam::amalgam_hilbert(spec.swapped(), 5).dims == forward);
        if (s % 10 == 0)
            CHECK(amalgam::reference::amalgam_hilbert(spec, 4) ==
                  std::vector<std::size_t>(forward.begin(), forward.begin() + 5));
    }
}

TEST_CASE("divided powers have polynomial dimensions for p = 2, 3, 5")
{
    std::mt19937_64 rng(6);
    for (int s = 0; s < cases; ++s) {
        const auto field = FieldSpec::prime(std::array<std::uint32_t, 3>{2, 3, 5}[s % 3]);
        std::vector<graded::Generator> divided, poly;
        std::vector<int> degrees;
        const int n = random_degree(rng, 1, 3);
        for (int i = 0; i < n; ++i) {
            const int d = 2 * random_degree(rng, 1, 3);
            divided.push_back({"h" + std::to_string(i), d, Flavor::divided_power});
            poly.push_back({"h" + std::to_string(i), d});
            degrees.push_back(d);
        }
        const auto gamma = AlgebraSpec::commutative(field, divided, 14);
        const auto q = AlgebraSpec::commutative(FieldSpec::rationals(), poly, 14);
        for (int m = 0; m <= 14; ++m) {
            CHECK(gamma.dimension(m) == q.dimension(m));
            CHECK(gamma.dimension(m) == testsupport::oracle::count_gc(degrees, m));
        }
        // h^j = j! h[j]
        const int j = random_degree(rng, 1, 14 / degrees[0]);
        Element power = Element::one(gamma);
        const Element h = Element::generator(gamma, std::size_t{0});
        long long factorial = 1;
        for (int i = 1; i <= j; ++i) {
            power = power * h;
            factorial *= i;
        }
        const Element hj = graded::parse_element(gamma, "h0[" + std::to_string(j) + "]");
        CHECK(power == Scalar::from_int(field, factorial) * hj);
    }
}

}

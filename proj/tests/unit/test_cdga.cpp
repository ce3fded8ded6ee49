#include "doctest.h"

#include "cdgacalc/cdga/constructions.hpp"
#include "cdgacalc/errors.hpp"
#include "cdgacalc/graded/parser.hpp"

using namespace cdgacalc;
using namespace cdgacalc::cdga;
using exact::FieldSpec;
using graded::parse_element;

namespace {

// Minimal model of S^2: Lambda(x, y), |x| = 2, |y| = 3, dy = x^2.
Differential sphere(int n)
{
    const auto a = AlgebraSpec::commutative(FieldSpec::rationals(), {{"x", 2}, {"y", 3}}, n);
    return Differential(a, {{"y", parse_element(a, "x^2")}});
}

Differential im_emb(const std::string& k, int n)
{
    const auto a = AlgebraSpec::commutative(
        FieldSpec::rationals(), {{"a", 2}, {"b", 2}, {"e", 3}, {"f", 3}, {"g", 3}, {"h", 4}}, n);
    graded::Parameters p{{"k", graded::parse_scalar(FieldSpec::rationals(), k)}};
    return Differential(a, {{"e", parse_element(a, "a^2")},
                            {"f", parse_element(a, "b^2")},
                            {"h", parse_element(a, "k*b*g", p)}});
}

}  // namespace

TEST_SUITE("cdga") {

TEST_CASE("Leibniz extension with signs")
{
    const auto a = AlgebraSpec::commutative(FieldSpec::rationals(), {{"a", 1}, {"c", 2}, {"t", 3}}, 8);
    const Differential d(a, {{"t", parse_element(a, "c^2")}});
    CHECK(d.apply(parse_element(a, "a*t")) == parse_element(a, "-a*c^2"));
    CHECK(d.apply(parse_element(a, "t*a")) == parse_element(a, "a*c^2"));
    CHECK(d.apply(parse_element(a, "c*t")) == parse_element(a, "c^3"));
    CHECK(d.apply(parse_element(a, "t^2")).is_zero());
    CHECK(extend_leibniz(d, parse_element(a, "a*c*t")) == d.apply(parse_element(a, "a*c*t")));
}

TEST_CASE("differential images must have degree |g| + 1")
{
    const auto a = AlgebraSpec::commutative(FieldSpec::rationals(), {{"x", 2}, {"y", 3}}, 8);
    CHECK_THROWS_AS(Differential(a, {{"y", parse_element(a, "x")}}), AlgebraError);
    const auto other = AlgebraSpec::commutative(FieldSpec::rationals(), {{"x", 2}, {"y", 3}}, 8);
    CHECK_THROWS_AS(Differential(a, {{"y", parse_element(other, "x^2")}}), AlgebraError);
}

TEST_CASE("d squared violations are reported with a witness")
{
    const auto a = AlgebraSpec::commutative(FieldSpec::rationals(), {{"x", 2}, {"y", 3}, {"z", 4}}, 8);
    const Differential d(a, {{"y", parse_element(a, "x^2")}, {"z", parse_element(a, "x*y")}});
    const auto v = check_d_squared(d);
    REQUIRE(v);
    CHECK(v->generator == "z");
    CHECK(v->value == parse_element(a, "x^3"));
    CHECK_FALSE(check_d_squared(sphere(8)));
}

TEST_CASE("cohomology of the sphere model")
{
    const auto report = cohomology(sphere(9), 8);
    CHECK(report.betti() == std::vector<std::size_t>{1, 0, 1, 0, 0, 0, 0, 0, 0});
    CHECK(report.at(2).representatives.at(0).to_string() == "x");
    CHECK_THROWS_AS(cohomology(sphere(9), 9), DegreeError);
}

TEST_CASE("im_emb cohomology and classes")
{
    const auto d = im_emb("1", 13);
    const auto report = cohomology(d, 12);
    CHECK(report.betti() == std::vector<std::size_t>{1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    const auto& a = d.algebra();
    CHECK(report.is_boundary(parse_element(a, "b*g"), 5));
    CHECK_FALSE(report.is_boundary(parse_element(a, "a*g"), 5));
    CHECK_THROWS_AS(report.express_class(parse_element(a, "e"), 3), AlgebraError);
    const auto c = cup(report, 2, 0, 3, 0);
    CHECK(c.size() == 1);
}

TEST_CASE("cup products are graded commutative")
{
    const auto report = cohomology(im_emb("2", 9), 8);
    for (std::size_t i = 0; i < report.at(2).betti; ++i)
        for (std::size_t j = 0; j < report.at(3).betti; ++j)
            CHECK(cup(report, 2, i, 3, j) == cup(report, 3, j, 2, i));
}

TEST_CASE("duality differential from brackets")
{
    // [x, x] = 2y on S^2 gives dy = x^2 after summing over ordered pairs.
    const auto a = AlgebraSpec::commutative(FieldSpec::rationals(), {{"x", 2}, {"y", 3}}, 8);
    WhiteheadTable table{{{"x", "x", parse_element(a, "y")}}};
    const auto d = duality_differential(a, table);
    CHECK(d.image(1) == parse_element(a, "x^2"));
    CHECK(d.image(0).is_zero());
    WhiteheadTable inconsistent{{{"x", "x", parse_element(a, "y")}, {"x", "x", parse_element(a, "2*y")}}};
    CHECK_THROWS_AS(duality_differential(a, inconsistent), AlgebraError);
}

TEST_CASE("quotient CDGA of the relative model")
{
    const auto a = AlgebraSpec::commutative(FieldSpec::rationals(),
                                            {{"a", 2}, {"b", 2}, {"e", 3}, {"f", 3}, {"g", 3}, {"h", 4},
                                             {"tt", 1}, {"xt", 1}, {"yt", 1}, {"wt", 2}},
                                            9);
    const Differential d(a, {{"xt", parse_element(a, "a")}, {"yt", parse_element(a, "b")},
                             {"wt", parse_element(a, "g")}, {"e", parse_element(a, "a^2")},
                             {"f", parse_element(a, "b^2")}, {"h", parse_element(a, "b*g")}});
    auto [qa, qd] = quotient_cdga(d, {"xt", "yt", "a", "b", "wt", "g"});
    REQUIRE(qa.generators().size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(qd.image(i).is_zero());
    CHECK_THROWS_AS(quotient_cdga(d, {"xt"}), AlgebraError);
}

TEST_CASE("presentation comparison")
{
    const auto report = cohomology(im_emb("1", 13), 12);
    const auto& a = report.algebra();
    PresentationTarget target{report.betti(), {}};
    for (const char* c : {"a", "b", "g", "b*h - f*g", "g*h", "b*h^2 - 2*f*g*h", "g*h^2"})
        target.candidates.push_back(parse_element(a, c));
    CHECK(compare_presentation(report, target, 12).pass);

    target.candidates.pop_back();
    const auto v = compare_presentation(report, target, 12);
    CHECK_FALSE(v.pass);
    CHECK(v.first_mismatch == 11);

    PresentationTarget wrong{{1, 0, 2, 1, 2}, {}};
    CHECK(compare_presentation(report, wrong, 4).first_mismatch == 4);
}

TEST_CASE("differential matrix shape")
{
    const auto d = sphere(8);
    const auto m = differential_matrix(d, 3);
    CHECK(m.rows() == d.algebra().dimension(4));
    CHECK(m.cols() == d.algebra().dimension(3));
    CHECK_THROWS_AS(differential_matrix(d, 8), DegreeError);
}

}

#include <random>

#include "doctest.h"

#include "cdgacalc/errors.hpp"
#include "cdgacalc/exact/linalg.hpp"
#include "generators.hpp"

using namespace cdgacalc;
using namespace cdgacalc::exact;

TEST_SUITE("exact") {

TEST_CASE("field parsing and names")
{
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("q").is_rational());
    CHECK(FieldSpec::parse("Fp:7").characteristic() == 7);
    CHECK(FieldSpec::parse("fp:2").name() == "Fp:2");
    CHECK_THROWS_AS(FieldSpec::parse("Fp:9"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("R"), InputError);
    CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(32001));
}

TEST_CASE("rational scalars stay canonical")
{
    const auto q = FieldSpec::rationals();
    const Scalar a = Scalar::from_ratio(q, 6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK(a.is_canonical());
    CHECK((a * a.inverse()).is_one());
    CHECK((a + Scalar::from_ratio(q, 3, 2)).is_zero());
    CHECK_THROWS_AS(Scalar::from_ratio(q, 1, 0), InputError);
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), AlgebraError);
}

TEST_CASE("residues reduce and invert")
{
    const auto f7 = FieldSpec::prime(7);
    CHECK(Scalar::from_int(f7, -1).residue() == 6);
    CHECK(Scalar::from_ratio(f7, 1, 3).residue() == 5);
    CHECK((Scalar::from_int(f7, 3) * Scalar::from_int(f7, 5)).is_one());
    CHECK_THROWS_AS(Scalar::from_ratio(f7, 1, 14), InputError);
    CHECK_THROWS_AS(Scalar::from_int(f7, 1) + Scalar::from_int(FieldSpec::prime(5), 1), AlgebraError);
}

TEST_CASE("rref of a small rational matrix")
{
    const ExactMatrix m(FieldSpec::rationals(), {{1, 2, 3}, {2, 4, 7}, {1, 2, 4}});
    const auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 2});
    const ExactMatrix expected(FieldSpec::rationals(), {{1, 2, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(r.reduced == expected);
}

TEST_CASE("kernel basis has a unit in each free column")
{
    const ExactMatrix m(FieldSpec::rationals(), {{1, 2, 3}, {2, 4, 7}});
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][1].is_one());
    for (const auto& x : m.apply(k[0]))
        CHECK(x.is_zero());
}

TEST_CASE("solve finds a solution or reports inconsistency")
{
    const auto q = FieldSpec::rationals();
    const ExactMatrix m(q, {{1, 1}, {1, -1}});
    const Vector b{Scalar::from_int(q, 3), Scalar::from_int(q, 1)};
    const auto x = solve(m, b);
    REQUIRE(x);
    CHECK((*x)[0] == Scalar::from_int(q, 2));
    CHECK((*x)[1] == Scalar::from_int(q, 1));

    const ExactMatrix singular(q, {{1, 1}, {2, 2}});
    const Vector c{Scalar::from_int(q, 1), Scalar::from_int(q, 3)};
    CHECK_FALSE(solve(singular, c));
}

TEST_CASE("parallel rref equals the serial reference above the threshold")
{
    std::mt19937_64 rng(42);
    for (auto field : {FieldSpec::prime(101), FieldSpec::rationals()}) {
        const auto m = testsupport::random_matrix(field, 70, 80, rng);
        const auto a = rref(m);
        const auto b = reference::rref(m);
        CHECK(a.rank == b.rank);
        CHECK(a.pivots == b.pivots);
        CHECK(a.reduced == b.reduced);
    }
}

TEST_CASE("sparse echelon reduces to an order-independent normal form")
{
    const auto q = FieldSpec::rationals();
    const SparseVector u{{0, Scalar::from_int(q, 1)}, {2, Scalar::from_int(q, 1)}};
    const SparseVector v{{1, Scalar::from_int(q, 2)}, {2, Scalar::from_int(q, 4)}};
    const SparseVector w{{0, Scalar::from_int(q, 1)}, {1, Scalar::from_int(q, 1)}, {2, Scalar::from_int(q, 5)}};
    SparseEchelon e1(q), e2(q);
    CHECK(e1.insert(u));
    CHECK(e1.insert(v));
    CHECK_FALSE(e1.insert(SparseVector{{0, Scalar::from_int(q, 2)}, {1, Scalar::from_int(q, 2)}, {2, Scalar::from_int(q, 6)}}));
    CHECK(e2.insert(v));
    CHECK(e2.insert(u));
    CHECK(e1.rank() == 2);
    CHECK(e1.reduce(w) == e2.reduce(w));
    CHECK(e1.pivots() == std::vector<std::size_t>{0, 1});
    CHECK(e1.contains(SparseVector{{0, Scalar::from_int(q, 3)}, {1, Scalar::from_int(q, 1)}, {2, Scalar::from_int(q, 5)}}));
}

}

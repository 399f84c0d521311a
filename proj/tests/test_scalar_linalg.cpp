#include <doctest.h>

#include "superz/linalg.hpp"

using namespace superz;

TEST_CASE("prime field arithmetic by hand")
{
    Field f = Field::prime(7);
    Scalar a(f, 3), b(f, 5);
    CHECK((a * b).residue() == 1);
    CHECK(inv(a) == b);
    CHECK((a - b).residue() == 5);
    CHECK(Scalar(f, -1).residue() == 6);
    CHECK(Scalar::parse(f, "1/2").residue() == 4);
    CHECK(Scalar::parse(f, "-3/4") * Scalar(f, 4) == Scalar(f, -3));
    CHECK_THROWS_AS(inv(Scalar(f, 14)), Error);
}

TEST_CASE("rationals")
{
    Field q = Field::rationals();
    Scalar x = Scalar::parse(q, "1/2") + Scalar::parse(q, "1/3");
    CHECK(x.str() == "5/6");
    CHECK(reduce(x.rational(), Field::prime(5)) == Scalar(Field::prime(5), 0));
    CHECK_THROWS(reduce(mpq_class(1, 7), Field::prime(7)));
}

TEST_CASE("modulus guard")
{
    for (int64_t bad : std::vector<int64_t>{0, 1, 4, 91, int64_t(1) << 31}) {
        try {
            Field::prime(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code == "NonPrimeModulus");
        }
    }
    CHECK(Field::prime(2147483647).p() == 2147483647u);
    Field big = Field::prime(2147483647);
    Scalar m(big, -1);
    CHECK((m * m).is_one());
}

TEST_CASE("fields do not mix")
{
    try {
        (void)(Scalar(Field::prime(5), 1) + Scalar(Field::prime(7), 1));
        FAIL("mixed");
    } catch (const Error& e) {
        CHECK(e.code == "FieldMismatch");
    }
}

TEST_CASE("rank depends on the characteristic")
{
    for (int64_t p : {0, 2, 3}) {
        Field f = p ? Field::prime(p) : Field::rationals();
        Matrix A(f, 2, 2);
        A(0, 0) = Scalar(f, 1);
        A(0, 1) = Scalar(f, 1);
        A(1, 0) = Scalar(f, 1);
        A(1, 1) = Scalar(f, -1);
        CHECK(rank(A) == (p == 2 ? 1u : 2u));
        CHECK(kernel(A).dim() == (p == 2 ? 1u : 0u));
    }
}

TEST_CASE("kernel, solve and subspace algebra")
{
    Field f = Field::rationals();
    Matrix A(f, 2, 3);
    int vals[2][3] = {{1, 2, 3}, {2, 4, 6}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = Scalar(f, vals[i][j]);
    Subspace K = kernel(A);
    REQUIRE(K.dim() == 2);
    for (auto& v : K.basis()) CHECK(is_zero(A.apply(v)));

    Vec b{Scalar(f, 3), Scalar(f, 6)};
    auto x = solve(A, b);
    REQUIRE(x);
    CHECK(A.apply(*x) == b);
    CHECK_FALSE(solve(A, Vec{Scalar(f, 1), Scalar(f, 1)}));

    Subspace S = Subspace::span(f, 3, {unit_vec(f, 3, 0), unit_vec(f, 3, 1)});
    Subspace T = Subspace::span(f, 3, {unit_vec(f, 3, 1), unit_vec(f, 3, 2)});
    CHECK(intersect(S, T).dim() == 1);
    CHECK(sum(S, T) == Subspace::whole(f, 3));
    CHECK(intersect(S, T) == Subspace::span(f, 3, {scaled(unit_vec(f, 3, 1), Scalar(f, 5))}));
}

TEST_CASE("row system saturates")
{
    Field f = Field::prime(5);
    RowSystem sys(f, 2);
    sys.add_equation(Vec{Scalar(f, 1), Scalar(f, 2)});
    CHECK(sys.solutions().dim() == 1);
    sys.add_equation(Vec{Scalar(f, 2), Scalar(f, 4)});
    CHECK_FALSE(sys.saturated());
    sys.add_equation(Vec{Scalar(f, 0), Scalar(f, 1)});
    CHECK(sys.saturated());
    CHECK(sys.solutions().dim() == 0);
}

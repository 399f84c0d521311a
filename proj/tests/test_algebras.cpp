#include <doctest.h>

#include "superz/constructors.hpp"
#include "superz/roots.hpp"

using namespace superz;

namespace {

std::string code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    return "";
}

}

TEST_CASE("dimensions of the classical families")
{
    Field f = Field::prime(7);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            CHECK(build_gl(m, n, f).dim() == size_t((m + n) * (m + n)));
            CHECK(build_gl(m, n, f).even_dim() == size_t(m * m + n * n));
            if (m != n) CHECK(build_sl(m, n, f).dim() == size_t((m + n) * (m + n) - 1));
            CHECK(build_osp(m, 2 * n, f).dim() == size_t(m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n));
        }
    CHECK(build_psl(2, 2, f).dim() == 14);
    CHECK(build_psl(3, 3, f).dim() == 34);
}

TEST_CASE("exceptional dimensions and parity split")
{
    Field f = Field::prime(7);
    auto d = build_d21(Scalar(f, 2), f);
    CHECK(d.dim() == 17);
    CHECK(d.even_dim() == 9);
    auto g = build_g3(f);
    CHECK(g.dim() == 31);
    CHECK(g.even_dim() == 17);
    auto h = build_f4(f);
    CHECK(h.dim() == 40);
    CHECK(h.even_dim() == 24);
}

TEST_CASE("super-Jacobi: parallel agrees with serial and both find nothing")
{
    Field f = Field::prime(5);
    std::vector<SuperAlgebra> algs = {build_gl(2, 1, f), build_sl(3, 1, f), build_psl(2, 2, f), build_osp(3, 2, f),
                                      build_osp(Partition::parse("3|2,2"), f, OspPairing::ZForm),
                                      build_d21(Scalar(f, 3), f), build_g3(f)};
    for (auto& a : algs) {
        auto par = check_super_jacobi(a);
        auto ser = check_super_jacobi_serial(a);
        CHECK(par.size() == ser.size());
        CHECK(par.empty());
        CHECK(check_table(a));
    }
}

TEST_CASE("super-Jacobi reference catches a broken table")
{
    Field f = Field::prime(7);
    SuperAlgebra a = build_gl(1, 1, f);
    // move one structure constant; the graded identity must notice
    size_t i = 0, j = 1;
    while (a.bracket_basis(i, j).empty()) ++j;
    Vec v = a.bracket(a.unit(i), a.unit(j));
    a.set_bracket(i, j, scaled(v, Scalar(f, 2)));
    auto par = check_super_jacobi(a);
    auto ser = check_super_jacobi_serial(a);
    CHECK_FALSE(ser.empty());
    CHECK(par.size() == ser.size());
}

TEST_CASE("input errors carry codes")
{
    CHECK(code_of([] { build_osp(3, 2, Field::prime(2)); }) == "BadPrime");
    CHECK(code_of([] { build_psl(3, 3, Field::prime(3)); }) == "PslBadPrime");
    CHECK(code_of([] { build_g3(Field::prime(3)); }) == "BadPrime");
    CHECK(code_of([] { build_f4(Field::prime(3)); }) == "BadPrime");
    Field f = Field::prime(7);
    CHECK(code_of([&] { build_d21(Scalar(f, 0), f); }) == "BadAlpha");
    CHECK(code_of([&] { build_d21(Scalar(f, 6), f); }) == "BadAlpha");
    CHECK(code_of([] { build_g3(Field::prime(3), true); }).empty());
}

TEST_CASE("exceptional algebras reduce from the rational model")
{
    auto q = build_g3(Field::rationals());
    auto r = q.reduced(Field::prime(11));
    auto d = build_g3(Field::prime(11));
    REQUIRE(r.dim() == d.dim());
    for (size_t i = 0; i < d.dim(); ++i)
        for (size_t j = 0; j < d.dim(); ++j) CHECK(r.bracket(r.unit(i), r.unit(j)) == d.bracket(d.unit(i), d.unit(j)));
}

TEST_CASE("highest roots over every listed simple system")
{
    auto coeffs = [](const std::string& fam) {
        std::vector<std::vector<long>> out;
        for (auto& ls : listed_systems(AlgebraKind{fam, {}})) out.push_back(highest_root(ls.roots, ls.pi).coeffs);
        return out;
    };
    auto g = coeffs("g3");
    REQUIRE(g.size() >= 3);
    CHECK(g[0] == std::vector<long>{2, 4, 2});
    CHECK(g[1] == std::vector<long>{3, 4, 2});
    // the printed row reads (3,2,2), which is delta+2eps2 and not a root maximum
    CHECK(g[2] == std::vector<long>{3, 3, 2});
    for (auto& c : coeffs("f4"))
        for (long x : c) CHECK(x <= 4);

    AlgebraKind g3{"g3", {}}, f4{"f4", {}};
    CHECK_FALSE(is_good_prime(g3, 3));
    CHECK(is_good_prime(g3, 5));
    CHECK_FALSE(is_good_prime(f4, 3));
    CHECK(is_good_prime(f4, 5));
    CHECK_FALSE(is_good_prime(AlgebraKind{"osp", {{"m", "5"}, {"n", "2"}}}, 2));
    CHECK(is_good_prime(AlgebraKind{"gl", {{"m", "3"}, {"n", "2"}}}, 2));
}

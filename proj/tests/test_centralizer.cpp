#include <doctest.h>

#include "superz/centralizer.hpp"
#include "superz/constructors.hpp"
#include "superz/orbits.hpp"
#include "superz/sampling.hpp"

using namespace superz;

namespace {

Subspace span_of(const SuperAlgebra& a, const std::vector<Vec>& vs)
{
    return Subspace::span(a.field(), a.dim(), vs);
}

// dim gl(V)^e = sum over ordered block pairs of min(lambda_i, lambda_j)
size_t gl_count(const Partition& lam)
{
    size_t s = 0;
    for (auto& x : lam.blocks)
        for (auto& y : lam.blocks) s += size_t(std::min(x.lambda, y.lambda));
    return s;
}

}

TEST_CASE("gl centralizer dimension matches the block count")
{
    Field f = Field::prime(3);
    for (const char* s : {"2|1", "3,1|2", "2,2|2,1", "4|1,1,1", "1,1|3"}) {
        Partition lam = Partition::parse(s);
        SuperAlgebra a = build_gl(lam.m(), lam.n(), f);
        auto o = nilpotent_from_partition(a, lam);
        CHECK(centralizer(a, o.rep).dim() == gl_count(lam));
    }
}

TEST_CASE("gl(2|1) regular nilpotent by hand")
{
    // e = e_{1,0}: V = <v, ev> even, <w> odd; g^e = <I_even..., e, ...>
    Field f = Field::rationals();
    Partition lam = Partition::parse("2|1");
    SuperAlgebra a = build_gl(2, 1, f);
    auto o = nilpotent_from_partition(a, lam);
    Subspace ge = centralizer(a, o.rep);
    CHECK(ge.dim() == 5);
    CHECK(ge.member(o.rep));
    auto z = center_of_centralizer(a, o.rep);
    CHECK(z.dim() == 2);   // identity and e
    auto graded = graded_centralizer(a, o);
    CHECK((graded.count(-1) == 0 || graded.at(-1).dim() == 0));
    size_t total = 0;
    for (auto& [j, s] : graded) total += s.dim();
    CHECK(total == 5);
}

TEST_CASE("odd elements are refused")
{
    Field f = Field::prime(5);
    SuperAlgebra a = build_gl(1, 1, f);
    Vec x = a.zero();
    for (size_t i = 0; i < a.dim(); ++i)
        if (a.parity(i) == 1) x[i] = Scalar(f, 1);
    try {
        centralizer(a, x);
        FAIL("accepted an odd element");
    } catch (const Error& e) {
        CHECK(e.code == "OddElement");
    }
}

TEST_CASE("xi maps commute with e")
{
    Field f = Field::prime(5);
    Partition lam = Partition::parse("3,1|2");
    JordanLayout L = JordanLayout::of(lam);
    Matrix e = jordan_matrix(f, L);
    for (auto& x : closed_form_basis_gl(lam)) {
        Matrix m = xi_matrix(f, L, x);
        CHECK_MESSAGE(matrix_add(e * m, m * e, Scalar(f, -1)).is_zero(), x.str());
    }
    CHECK(closed_form_basis_gl(lam).size() == gl_count(lam));
}

TEST_CASE("sl diagonal combination needs the sign of both blocks")
{
    Field f = Field::rationals();
    Partition lam = Partition::parse("2|1");
    JordanLayout L = JordanLayout::of(lam);
    auto eta = L.eta();
    Matrix x0 = xi_matrix(f, L, {0, 0, 0}), x1 = xi_matrix(f, L, {1, 1, 0});
    // lambda_2 xi_1 - s lambda_1 xi_2
    Matrix printed = matrix_add(x0, x1, Scalar(f, -2));
    Matrix fixed = matrix_add(x0, x1, Scalar(f, 2));
    CHECK_FALSE(supertrace(printed, eta).is_zero());
    CHECK(supertrace(fixed, eta).is_zero());
}

TEST_CASE("closed forms against the kernel oracle on sampled partitions")
{
    struct Run {
        const char* family;
        int64_t p;
        SlRegime regime;
        int max_v;
    };
    std::vector<Run> runs = {{"gl", 0, SlRegime::Any, 8},
                             {"gl", 3, SlRegime::Any, 8},
                             {"sl", 3, SlRegime::PDividesAll, 12},
                             {"sl", 5, SlRegime::PNotDividesSome, 8},
                             {"psl", 5, SlRegime::Any, 8},
                             {"osp", 3, SlRegime::Any, 8},
                             {"osp", 0, SlRegime::Any, 8}};
    for (auto& r : runs) {
        Field f = r.p ? Field::prime(r.p) : Field::rationals();
        for (auto& c : random_cases(r.family, f, 12, 99, r.max_v, r.regime)) {
            CAPTURE(c.str());
            SuperAlgebra a = build_case(c, f);
            auto o = nilpotent_from_partition(a, c.lam);
            Subspace ge = centralizer(a, o.rep);
            ClosedForm cf = closed_form_basis(a, c.lam);
            CHECK(cf.vectors.size() == ge.dim());
            CHECK(span_of(a, cf.vectors) == ge);

            SuperAlgebra az = c.family == "osp" ? build_case(c, f, true) : a;
            auto oz = nilpotent_from_partition(az, c.lam);
            Subspace z = center_of_centralizer(az, oz.rep);
            CHECK(span_of(az, closed_form_center(az, c.lam, CenterReading::Corrected).vectors) == z);
        }
    }
}

TEST_CASE("sampled sl partitions respect the regime")
{
    Field f = Field::prime(3);
    for (auto& c : random_cases("sl", f, 20, 4, 12, SlRegime::PDividesAll))
        for (auto& b : c.lam.blocks) CHECK(b.lambda % 3 == 0);
    for (auto& c : random_cases("sl", f, 20, 4, 9, SlRegime::PNotDividesSome)) {
        bool some = false;
        for (auto& b : c.lam.blocks) some = some || b.lambda % 3 != 0;
        CHECK(some);
    }
    CHECK(random_cases("gl", f, 5, 11, 6)[3].str() == random_cases("gl", f, 5, 11, 6)[3].str());
}

TEST_CASE("stated center readings where the oracle disagrees")
{
    {
        // I lies in sl(4|1) when p = 3, so it is central
        Field f = Field::prime(3);
        Partition lam = Partition::parse("3,1|1");
        SuperAlgebra a = build_sl(4, 1, f);
        auto o = nilpotent_from_partition(a, lam);
        Subspace z = center_of_centralizer(a, o.rep);
        CHECK(z.dim() == 3);
        CHECK(span_of(a, closed_form_center(a, lam).vectors).dim() == 2);
        CHECK(span_of(a, closed_form_center(a, lam, CenterReading::Corrected).vectors) == z);
    }
    {
        // odd powers of e run up to the largest part
        Field f = Field::rationals();
        Partition lam = Partition::parse("5|1,1");
        SuperAlgebra a = build_osp(lam, f, OspPairing::ZForm);
        auto o = nilpotent_from_partition(a, lam);
        Subspace z = center_of_centralizer(a, o.rep);
        CHECK(z.dim() == 2);
        CHECK(z != span_of(a, closed_form_center(a, lam).vectors));
        CHECK(z == span_of(a, closed_form_center(a, lam, CenterReading::Corrected).vectors));
    }
}

TEST_CASE("osp center: both extra central vectors occur")
{
    Field f = Field::prime(5);
    // first extra vector: two self-paired blocks of different parity
    // second: the leading pair has odd length and even parity
    for (const char* s : {"3|2", "3,3|2", "3,3|1,1"}) {
        CAPTURE(s);
        Partition lam = Partition::parse(s);
        SuperAlgebra a = build_osp(lam, f, OspPairing::ZForm);
        auto o = nilpotent_from_partition(a, lam);
        Subspace z = center_of_centralizer(a, o.rep);
        CHECK(z.dim() == 2);
        Subspace powers(f, a.dim());
        powers.add(o.rep);
        CHECK(powers.dim() == 1);
        CHECK(z == span_of(a, closed_form_center(a, lam).vectors));
        CHECK(z == span_of(a, closed_form_center(a, lam, CenterReading::Corrected).vectors));
    }
}

TEST_CASE("osp center needs the zform layout")
{
    Field f = Field::prime(3);
    Partition lam = Partition::parse("3|2");
    SuperAlgebra s = build_osp(lam, f, OspPairing::SForm);
    try {
        closed_form_center(s, lam);
        FAIL("sform accepted");
    } catch (const Error& e) {
        CHECK(e.code == "HypothesisViolation");
    }
}

#include "superz/tables.hpp"

#include <sstream>

#include "superz/centralizer.hpp"
#include "superz/orbits.hpp"
#include "superz/reachability.hpp"

namespace superz {

Vec parse_combo(const SuperAlgebra& a, const std::string& s)
{
    std::istringstream in(s);
    std::string tok;
    Vec v = a.zero();
    int sign = 1;
    bool want_term = true;
    while (in >> tok) {
        if (!want_term) {
            if (tok != "+" && tok != "-") throw Error("BadParams", "bad combination: " + s);
            sign = tok == "+" ? 1 : -1;
            want_term = true;
            continue;
        }
        Scalar c(a.field(), sign);
        auto star = tok.find('*');
        if (star != std::string::npos) {
            c *= Scalar::parse(a.field(), tok.substr(0, star));
            tok = tok.substr(star + 1);
        }
        v[a.index(tok)] += c;
        want_term = false;
    }
    if (want_term) throw Error("BadParams", "bad combination: " + s);
    return v;
}

namespace {

std::vector<std::string> both(const std::vector<std::string>& ws)
{
    std::vector<std::string> out;
    for (auto i : {"v1", "v-1"})
        for (auto& w : ws) out.push_back(i + w);
    return out;
}

std::vector<std::string> both_diff(const std::string& w1, const std::string& w2, const std::string& op)
{
    return {"v1" + w1 + " " + op + " v1" + w2, "v-1" + w1 + " " + op + " v-1" + w2};
}

std::vector<std::string> join(std::vector<std::vector<std::string>> parts)
{
    std::vector<std::string> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<std::string> g3_odd(std::vector<int> is, std::vector<int> js)
{
    std::vector<std::string> out;
    for (int i : is)
        for (int j : js) out.push_back("v" + std::to_string(i) + "e" + std::to_string(j));
    return out;
}

std::vector<ExpectedRow> d21_rows()
{
    std::vector<std::string> e1_odd;
    for (int j : {1, -1})
        for (int k : {1, -1}) e1_odd.push_back("v(1," + std::to_string(j) + "," + std::to_string(k) + ")");
    ExpectedRow zero{"0", 17, -1, -1, 0, {}, {}, false, 'Y', 'Y', 'Y'};
    ExpectedRow e1{"E1", 11, -1, -1, 1, {}, join({{"E1", "E2", "H2", "F2", "E3", "H3", "F3"}, e1_odd}), false, 'Y', 'Y', 'Y'};
    ExpectedRow e2{"E2", 11, -1, -1, 1, {}, {}, false, 'Y', 'Y', 'Y'};
    ExpectedRow e3{"E3", 11, -1, -1, 1, {}, {}, false, 'Y', 'Y', 'Y'};
    ExpectedRow e12{"E1+E2", 9, -1, -1, 1, {},
                    {"E1", "E2", "E3", "H3", "F3", "v(1,1,1)", "v(1,1,-1)", "v(1,-1,1) - v(-1,1,1)",
                     "v(1,-1,-1) - v(-1,1,-1)"},
                    false, 'N', 'N', 'N'};
    ExpectedRow e23{"E2+E3", 9, -1, -1, 1, {}, {}, false, 'N', 'N', 'N'};
    ExpectedRow e13{"E1+E3", 9, -1, -1, 1, {}, {}, false, 'N', 'N', 'N'};
    ExpectedRow e123{"E1+E2+E3", 6, -1, -1, 2, {"v(1,1,1)"},
                     {"E1", "E2", "E3", "v(1,1,1)", "v(1,1,-1) - v(-1,1,1)", "v(1,-1,1) - v(-1,1,1)"}, false, 'Y', 'N',
                     'Y'};
    return {zero, e1, e2, e3, e12, e23, e13, e123};
}

std::vector<ExpectedRow> g3_rows()
{
    std::vector<std::string> g2 = {"x1", "x2", "x3", "x4", "x5", "x6", "y1", "y2", "y3", "y4", "y5", "y6", "h1", "h2"};
    return {
        {"0", 31, -1, -1, 0, {}, {}, false, 'Y', 'Y', 'Y'},
        {"x2", 21, -1, -1, 1, {},
         join({{"E", "H", "F", "2*h1 + 3*h2", "x2", "x3", "x6", "y1", "y5", "x4", "y4"}, g3_odd({1, -1}, {0, -1, 2, 3, -3})}),
         false, 'Y', 'Y', 'Y'},
        {"x1", 15, -1, -1, 1, {},
         join({{"E", "H", "F", "x5", "y2", "x1", "x6", "y6", "h1 + 2*h2"}, g3_odd({1, -1}, {-2, 1, 3})}), false, 'Y', 'Y',
         'N'},
        {"x2+x5", 13, -1, -1, 2, {"x6"}, join({{"E", "H", "F", "x6", "x2 + x5", "x3", "x4"}, g3_odd({1, -1}, {0, 2, 3})}),
         false, 'N', 'N', 'N'},
        {"x1+x2", 7, -1, -1, 2, {"x6"}, join({{"E", "H", "F", "x6", "x1 + x2"}, g3_odd({1, -1}, {3})}), false, 'N', 'N',
         'N'},
        {"E", 22, -1, -1, 1, {}, join({{"E"}, g2, g3_odd({1}, {0, 1, -1, 2, -2, 3, -3})}), false, 'Y', 'Y', 'Y'},
        {"E+x2", 16, -1, -1, 1, {},
         {"E", "2*h1 + 3*h2", "x2", "x3", "x6", "y1", "y5", "x4", "y4", "v1e2", "v1e-1", "v1e3", "v1e-3", "v1e0",
          "v1e-2 + v-1e-1", "v1e1 - v-1e2"},
         false, 'Y', 'Y', 'Y'},
        {"E+x1", 13, -1, -1, 1, {},
         {"E", "x5", "y2", "x1", "x6", "y6", "h1 + 2*h2", "v1e1", "v1e3", "v1e-2", "v1e0 - v-1e1", "v1e-3 - v-1e-2",
          "v1e2 + v-1e3"},
         false, '5', 'N', 'N'},
        {"E+(x2+x5)", 10, -1, -1, 2, {"x6"},
         {"E", "x6", "x2 + x5", "x3", "x4", "v1e3", "v1e2", "v1e0", "v1e1 - v-1e2", "6*v-1e3 - v1e-1"}, false, 'Y', 'N',
         'Y'},
        {"E+(x1+x2)", 5, -1, -1, 3, {"x6", "v1e3"}, {"E", "x6", "x1 + x2", "v1e3", "v-1e3 + v1e2"}, false, 'N', 'N', 'N'},
    };
}

std::vector<ExpectedRow> f4_rows()
{
    auto s1 = [](std::vector<std::string> ws) {
        for (auto& w : ws) w = "v1" + w;
        return ws;
    };
    return {
        {"e(7)", 10, 6, 4, 2, {"R1,2"}, join({both({"e1e2e3s"}), both_diff("e1s", "e2e3s", "-")}), true, 'N', 'N', 'N'},
        {"e(5,1^2)", 12, 8, 4, 2, {"R1,2"}, both({"e1e2e3s", "e1e2s"}), true, 'N', 'N', 'N'},
        {"e(3^2,1)", 18, 10, 8, 2, {"R1,2"}, both({"e1e2s", "e1e2e3s", "e1e3s", "e2s"}), true, 'N', 'N', 'N'},
        {"e(3,2^2)", 20, 12, 8, 1, {}, join({both({"e1e2e3s", "e1e2s", "e1e3s"}), both_diff("e1s", "e2e3s", "-")}), true,
         'Y', 'Y', 'Y'},
        {"e(3,1^4)", 22, 14, 8, 1, {}, both({"e1e2e3s", "e1e2s", "e1e3s", "e1s"}), true, 'Y', 'Y', 'Y'},
        {"e(2^2,1^3)", 28, 16, 12, 1, {}, both({"e1e2e3s", "e1e2s", "e1e3s", "e1s", "e2s", "e2e3s"}), true, 'Y', 'Y', 'Y'},
        {"0", 40, 24, 16, 0, {}, {}, true, 'Y', 'Y', 'Y'},
        {"E+e(7)", 7, 4, 3, 3, {"R1,2", "v1e1e2e3s"},
         {"v1e1e2e3s", "v1e1e2s - v-1e1e2e3s", "v1e1s - v1e2e3s"}, true, 'N', 'N', 'N'},
        {"E+e(5,1^2)", 10, 6, 4, 2, {"R1,2"},
         {"v1e1e2e3s", "v1e1e2s", "v1e1s - v-1e1e2s", "v1e1e3s + v-1e1e2e3s"}, true, 'N', 'N', 'N'},
        {"E+e(3^2,1)", 14, 8, 6, 2, {"R1,2"},
         join({s1({"e1e2s", "e1e2e3s", "e2s", "e1e3s"}), {"v1e1s - v-1e1e2e3s", "v-1e1e2s + v1e2e3s"}}), true, 'Y', 'N',
         'Y'},
        {"E+e(3,2^2)", 17, 10, 7, 1, {},
         join({s1({"e1e2e3s", "e1e2s", "e1e3s"}),
               {"v1e1s - v-1e1e2e3s", "v1e2e3s - v-1e1e2e3s", "v1e3s + v-1e1e3s", "v1e2s + v-1e1e2s"}}),
         true, 'Y', 'N', 'Y'},
        {"E+e(3,1^4)", 20, 12, 8, 1, {},
         join({s1({"e1s", "e1e3s", "e1e2e3s", "e1e2s"}),
               {"v1s - v-1e1s", "v1e2s + v-1e1e2s", "v1e3s + v-1e1e3s", "v1e2e3s - v-1e1e2e3s"}}),
         true, 'N', 'N', 'N'},
        {"E+e(2^2,1^3)", 22, 14, 8, 1, {},
         join({s1({"e1e2e3s", "e1e2s", "e1s", "e2s", "e1e3s", "e2e3s"}), {"v1s - v-1e1e2s", "v1e3s - v-1e1e2e3s"}}), true,
         'Y', 'Y', 'Y'},
        {"E", 30, 22, 8, 1, {}, s1({"s", "e1s", "e2s", "e3s", "e1e2s", "e1e3s", "e2e3s", "e1e2e3s"}), true, 'Y', 'Y', 'Y'},
    };
}

bool expected_bool(char c, const Field& f)
{
    if (c == '5') return !(f.is_prime() && f.p() == 5);
    return c == 'Y';
}

RowCheck check_row(const SuperAlgebra& a, const OrbitSpec& o, const ExpectedRow& row)
{
    RowCheck rc{o.label, {}};
    if (row.label != o.label) rc.diffs.push_back("catalog label " + o.label + " against table row " + row.label);
    auto diff = [&](const std::string& what, long want, long got) {
        if (want >= 0 && want != got)
            rc.diffs.push_back(what + ": table " + std::to_string(want) + ", computed " + std::to_string(got));
    };
    auto graded = graded_centralizer(a, o);
    Subspace ge(a.field(), a.dim());
    for (auto& [j, s] : graded) ge = sum(ge, s);
    auto hb = homogeneous_basis(a, ge);
    long even = 0;
    for (auto& v : hb) even += a.parity_of(v) == 0;
    diff("dim g^e", row.dim_ge, long(ge.dim()));
    diff("dim g^e even", row.dim_even, even);
    diff("dim g^e odd", row.dim_odd, long(ge.dim()) - even);

    if (!row.basis.empty()) {
        Subspace want(a.field(), a.dim());
        for (auto& s : row.basis) want.add(parse_combo(a, s));
        Subspace got = ge;
        if (row.basis_is_odd_part) {
            got = Subspace(a.field(), a.dim());
            for (auto& v : hb)
                if (a.parity_of(v) == 1) got.add(v);
        }
        if (want != got) rc.diffs.push_back(std::string(row.basis_is_odd_part ? "odd part of " : "") + "g^e basis span differs");
    }

    Subspace z = center_of_centralizer(a, graded);
    diff("dim z(g^e)", row.center_dim, long(z.dim()));
    Subspace zw(a.field(), a.dim());
    zw.add(o.rep);
    for (auto& s : row.center) zw.add(parse_combo(a, s));
    if (zw != z) rc.diffs.push_back("center basis span differs");

    auto v = classify(a, o, graded);
    auto verdict = [&](const char* what, char want, bool got) {
        if (expected_bool(want, a.field()) != got)
            rc.diffs.push_back(std::string(what) + ": table " + (expected_bool(want, a.field()) ? "Yes" : "No") +
                               ", computed " + (got ? "Yes" : "No"));
    };
    verdict("reachable", row.reachable, v.reachable);
    verdict("strongly reachable", row.strongly, v.strongly_reachable);
    verdict("Panyushev", row.panyushev, v.panyushev);
    return rc;
}

}

std::vector<ExpectedRow> expected_table(const std::string& family)
{
    if (family == "d21") return d21_rows();
    if (family == "g3") return g3_rows();
    if (family == "f4") return f4_rows();
    throw Error("BadParams", "no published table for " + family);
}

std::vector<RowCheck> verify_table(const SuperAlgebra& a, bool parallel)
{
    auto rows = expected_table(a.kind().family);
    auto orbits = exceptional_orbit_catalog(a);
    if (rows.size() != orbits.size()) throw Error("Internal", "catalog and table disagree in length");
    std::vector<RowCheck> out(orbits.size());
    std::vector<std::string> errors(orbits.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t i = 0; i < orbits.size(); ++i) {
        try {
            out[i] = check_row(a, orbits[i], rows[i]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (size_t i = 0; i < orbits.size(); ++i)
        if (!errors[i].empty()) out[i] = RowCheck{orbits[i].label, {"error: " + errors[i]}};
    return out;
}

}

namespace superz {

std::vector<Anchor> worked_anchors(const SuperAlgebra& a)
{
    const std::string fam = a.kind().family;
    auto P = [&](const std::string& t) { return parse_combo(a, t); };
    std::vector<Anchor> out;
    auto add = [&](std::string text, std::string x, std::string y, Vec want) {
        out.push_back({std::move(text), P(x), P(y), std::move(want)});
    };
    if (fam == "d21") {
        Scalar alpha = Scalar::parse(a.field(), a.kind().param("alpha"));
        Scalar four(a.field(), 4);
        // sigma = (1+alpha, -1, -alpha)
        std::string u1 = "v(1,1,-1) - v(-1,1,1)", u2 = "v(1,-1,1) - v(-1,1,1)";
        add("4σ₂E₂", u1, u1, scaled(P("E2"), -four));
        add("4σ₃E₃", u2, u2, scaled(P("E3"), -four * alpha));
    } else if (fam == "g3") {
        add("−8E+8x₁", "v1e0 - v-1e1", "v1e0 - v-1e1", P("-8*E + 8*x1"));
        add("16E+4x₁", "v1e3", "v1e-3 - v-1e-2", P("16*E + 4*x1"));
        add("16E+4x₁ (second pair)", "v1e-2", "v1e2 + v-1e3", P("16*E + 4*x1"));
    } else if (fam == "f4") {
        std::string x = "v1e1s - v-1e1e2e3s", y = "v-1e1e2s + v1e2e3s";
        add("[x,x]=R_{1,0}", x, x, P("R1,0"));
        add("[x,v₁⊗e₂s]=½R_{2,0}", x, "v1e2s", P("1/2*R2,0"));
        add("[x,v₁⊗e₁e₃s]=R_{1,3}", x, "v1e1e3s", P("R1,3"));
        add("[x,y]=e_{(3²,1)}−6E", x, y, P("R1,-3 + R2,3 - 6*E"));
        add("6E", "v1e2s", "v1e1e3s", P("6*E"));
        add("[v₁⊗e₂s,y]=R_{2,−3}", "v1e2s", y, P("R2,-3"));
        add("R_{1,2}", "v1e1e2e3s", y, P("R1,2"));
    }
    return out;
}

bool Anchor::holds(const SuperAlgebra& a) const
{
    return a.bracket(x, y) == want;
}

}

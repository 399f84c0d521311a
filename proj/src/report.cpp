#include "superz/report.hpp"

#include <chrono>

#include "superz/centralizer.hpp"
#include "superz/constructors.hpp"
#include "superz/reachability.hpp"

namespace superz {

using nlohmann::json;

std::string field_str(const Field& f)
{
    return f.is_prime() ? std::to_string(f.p()) : "rational";
}

json kind_json(const AlgebraKind& k)
{
    json params = json::object();
    for (auto& [key, val] : k.params) params[key] = val;
    return {{"family", k.family}, {"params", params}};
}

json vector_json(const SuperAlgebra& a, const Vec& v)
{
    json out = json::array();
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({a.label(i).name, v[i].str()});
    return out;
}

std::vector<std::string> warnings_for(const SuperAlgebra& a)
{
    std::vector<std::string> w;
    const auto& fam = a.kind().family;
    if (!a.field().is_prime()) return w;
    long p = a.field().p();
    if (fam == "d21" && p <= 3)
        w.push_back("p = " + std::to_string(p) + " is not above 3, the range where the D(2,1;alpha) orbit classification is known");
    if ((fam == "g3" || fam == "f4") && p <= 15)
        w.push_back("p = " + std::to_string(p) + " is not above 15, the range where the orbit classification is known for " +
                    (fam == "g3" ? "G(3)" : "F(4)"));
    return w;
}

DimensionIdentities check_dimension_identities(const SuperAlgebra& a, const OrbitSpec& o,
                                               const std::map<int, Subspace>& graded)
{
    DimensionIdentities r;
    std::map<int, long> g;
    for (size_t i = 0; i < a.dim(); ++i) ++g[o.degree[i]];
    long total = 0;
    for (auto& [j, s] : graded) {
        total += long(s.dim());
        if (j < 0 && s.dim()) r.nothing_negative = false;
        if (j >= 0) {
            long want = g[j] - (g.count(j + 2) ? g[j + 2] : 0);
            if (long(s.dim()) != want) r.per_degree = false;
        }
    }
    r.total = total == (g.count(0) ? g[0] : 0) + (g.count(1) ? g[1] : 0);
    return r;
}

bool check_degree_two_center(const SuperAlgebra& a, const OrbitSpec& o, const Subspace& center)
{
    Subspace z2 = intersect(center, degree_piece(a, o, 2));
    Subspace e(a.field(), a.dim());
    e.add(o.rep);
    return z2 == e;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json closed_form_section(const SuperAlgebra& a, const OrbitSpec& o, const Subspace& ge, const Subspace& z)
{
    json out;
    const Partition& lam = *o.partition;
    try {
        auto cf = closed_form_basis(a, lam);
        out["basis_matches"] = Subspace::span(a.field(), a.dim(), cf.vectors) == ge && cf.vectors.size() == ge.dim();
        out["notes"] = cf.notes;
    } catch (const Error& e) {
        out["basis_matches"] = nullptr;
        out["notes"] = {e.code + ": " + e.what()};
    }
    // the center theorem for osp is phrased for the form splitting V = V1 + V2
    std::optional<SuperAlgebra> zalg;
    if (a.kind().family == "osp" && a.kind().param("pairing") != "zform")
        zalg = build_osp(lam, a.field(), OspPairing::ZForm, true);
    const SuperAlgebra& b = zalg ? *zalg : a;
    Subspace zb = zalg ? center_of_centralizer(b, graded_centralizer(b, nilpotent_from_partition(b, lam))) : z;
    for (auto [key, reading] : {std::pair{"center_matches_stated", CenterReading::Stated},
                                std::pair{"center_matches_corrected", CenterReading::Corrected}}) {
        try {
            auto cz = closed_form_center(b, lam, reading);
            out[key] = Subspace::span(b.field(), b.dim(), cz.vectors) == zb;
        } catch (const Error& e) {
            out[key] = nullptr;
            out["notes"].push_back(e.code + ": " + e.what());
        }
    }
    return out;
}

}

json orbit_report(const SuperAlgebra& a, const OrbitSpec& o, const ReportOptions& opt)
{
    auto t0 = std::chrono::steady_clock::now();
    json r;
    r["schema"] = kSchema;
    r["kind"] = kind_json(a.kind());
    r["prime"] = field_str(a.field());
    r["label"] = o.label;
    r["dim_g"] = a.dim();

    auto graded = graded_centralizer(a, o);
    double t_ge = ms_since(t0);
    Subspace ge(a.field(), a.dim());
    json grading = json::object(), ambient = json::object(), basis = json::array();
    std::map<int, long> g;
    for (size_t i = 0; i < a.dim(); ++i) ++g[o.degree[i]];
    for (auto& [j, n] : g) ambient[std::to_string(j)] = n;
    size_t even = 0;
    for (auto& [j, s] : graded) {
        ge = sum(ge, s);
        if (s.dim()) grading[std::to_string(j)] = s.dim();
        for (auto& v : homogeneous_basis(a, s)) {
            int par = a.parity_of(v);
            even += par == 0;
            basis.push_back({{"degree", j}, {"parity", par}, {"vector", vector_json(a, v)}});
        }
    }
    r["dim_ge"] = ge.dim();
    r["dim_ge_even"] = even;
    r["dim_ge_odd"] = ge.dim() - even;
    r["grading"] = grading;
    r["ambient_grading"] = ambient;
    r["centralizer_basis"] = basis;

    auto t1 = std::chrono::steady_clock::now();
    Subspace z = center_of_centralizer(a, graded);
    double t_z = ms_since(t1);
    r["center_dim"] = z.dim();
    json zb = json::array();
    for (auto& v : homogeneous_basis(a, z)) zb.push_back(vector_json(a, v));
    r["center_basis"] = zb;

    auto t2 = std::chrono::steady_clock::now();
    auto verdict = classify(a, o, graded);
    double t_r = ms_since(t2);
    r["reachable"] = verdict.reachable;
    r["strongly_reachable"] = verdict.strongly_reachable;
    r["panyushev"] = verdict.panyushev;
    if (verdict.witness) {
        json w = json::array();
        for (auto& t : verdict.witness->terms)
            w.push_back({{"c", t.c.str()},
                         {"x", vector_json(a, verdict.witness->basis[t.i])},
                         {"y", vector_json(a, verdict.witness->basis[t.j])}});
        r["witness"] = w;
    } else {
        r["witness"] = nullptr;
    }

    auto ids = check_dimension_identities(a, o, graded);
    r["checks"] = {{"dim_ge_is_sum_of_grading", true},
                   {"no_negative_degrees", ids.nothing_negative},
                   {"dim_ge_equals_g0_plus_g1", ids.total},
                   {"dim_ge_j_equals_gj_minus_gj2", ids.per_degree},
                   {"center_degree_two_is_e", check_degree_two_center(a, o, z)}};
    if (o.partition) r["closed_form"] = closed_form_section(a, o, ge, z);

    auto warnings = warnings_for(a);
    if (!ids.all()) warnings.push_back("dimension identities of the grading fail for this orbit");
    r["warnings"] = warnings;
    if (opt.timing)
        r["timing"] = {{"centralizer_ms", t_ge}, {"center_ms", t_z}, {"reachability_ms", t_r}, {"total_ms", ms_since(t0)}};
    return r;
}

std::vector<std::string> csv_header()
{
    return {"family", "params", "prime", "label", "dim_g", "dim_ge", "dim_ge_even", "dim_ge_odd", "center_dim",
            "reachable", "strongly_reachable", "panyushev"};
}

std::vector<std::string> csv_row(const json& r)
{
    std::string params;
    for (auto& [k, v] : r["kind"]["params"].items()) params += (params.empty() ? "" : ";") + k + "=" + v.get<std::string>();
    auto yn = [](const json& b) { return b.get<bool>() ? std::string("yes") : std::string("no"); };
    return {r["kind"]["family"], params, r["prime"], r["label"],
            std::to_string(r["dim_g"].get<long>()), std::to_string(r["dim_ge"].get<long>()),
            std::to_string(r["dim_ge_even"].get<long>()), std::to_string(r["dim_ge_odd"].get<long>()),
            std::to_string(r["center_dim"].get<long>()), yn(r["reachable"]), yn(r["strongly_reachable"]),
            yn(r["panyushev"])};
}

}

#include "superz/orbits.hpp"

#include <algorithm>

#include "superz/constructors.hpp"

namespace superz {

Matrix jordan_matrix(const Field& f, const JordanLayout& L)
{
    Matrix e(f, size_t(L.N), size_t(L.N));
    for (size_t i = 0; i < L.blocks.size(); ++i)
        for (int k = 0; k + 1 < L.blocks[i].lambda; ++k)
            e(size_t(L.index(i, k + 1)), size_t(L.index(i, k))) = Scalar(f, 1);
    return e;
}

bool is_nilpotent(const SuperAlgebra& a, const Vec& x)
{
    Matrix ad = a.ad_matrix(x);
    for (size_t i = 0; i < a.dim(); ++i) {
        Vec v = a.unit(i);
        size_t steps = 0;
        while (!is_zero(v)) {
            if (++steps > a.dim()) return false;
            v = ad.apply(v);
        }
    }
    return true;
}

namespace {

void validate(const SuperAlgebra& a, const OrbitSpec& o)
{
    for (size_t i = 0; i < a.dim(); ++i)
        if (!o.rep[i].is_zero() && o.degree[i] != 2)
            throw Error("BadOrbit", o.label + ": support label " + a.label(i).name + " has degree " +
                                         std::to_string(o.degree[i]));
    if (a.parity_of(o.rep) != 0) throw Error("OddElement", o.label + " is not even");
    if (!is_nilpotent(a, o.rep)) throw Error("BadOrbit", o.label + " is not nilpotent");
}

int as_int(const std::string& s)
{
    return std::stoi(s);
}

}

OrbitSpec nilpotent_from_partition(const SuperAlgebra& a, const Partition& lam)
{
    const MatrixRealization* R = a.realization();
    const std::string& fam = a.kind().family;
    if (!R) throw Error("BadPartition", "partitions label orbits only in the classical families");
    JordanLayout L = JordanLayout::of(lam);
    if (fam == "osp") {
        const auto& built = *R->layout;
        bool same = built.blocks.size() == L.blocks.size();
        for (size_t i = 0; same && i < L.blocks.size(); ++i)
            same = built.blocks[i].lambda == L.blocks[i].lambda && built.blocks[i].parity == L.blocks[i].parity;
        if (!same)
            throw Error("BadPartition", "this osp algebra is built for " + a.kind().param("form") +
                                            ", not for " + lam.str());
    } else {
        int m = as_int(a.kind().param("m")), n = as_int(a.kind().param("n"));
        if (lam.m() != m || lam.n() != n)
            throw Error("BadPartition", "partition " + lam.str() + " does not fit (" + std::to_string(m) + "|" +
                                            std::to_string(n) + ")");
    }
    OrbitSpec o;
    o.label = lam.str();
    o.partition = lam;
    o.rep = R->coords(jordan_matrix(a.field(), L));
    auto w = L.weights();
    o.degree.resize(a.dim());
    for (size_t l = 0; l < a.dim(); ++l) {
        const Matrix& M = R->basis[l];
        bool found = false;
        for (size_t r = 0; r < M.rows(); ++r)
            for (size_t c = 0; c < M.cols(); ++c) {
                if (M(r, c).is_zero()) continue;
                int d = w[r] - w[c];
                if (!found) o.degree[l] = d, found = true;
                else if (o.degree[l] != d)
                    throw Error("BadPartition", "basis label " + a.label(l).name + " is not homogeneous for " + lam.str());
            }
    }
    validate(a, o);
    return o;
}

namespace {

struct CatalogRow {
    std::string label;
    std::vector<std::pair<std::string, long>> rep;
    std::vector<int> exponents;
};

std::vector<CatalogRow> rows_for(const std::string& fam)
{
    if (fam == "d21") {
        std::vector<CatalogRow> rows;
        for (int mask : {0, 1, 2, 4, 3, 6, 5, 7}) {
            CatalogRow r;
            std::string lab;
            for (int i = 0; i < 3; ++i) {
                bool on = mask & (1 << i);
                r.exponents.push_back(on ? 1 : 0);
                if (on) {
                    r.rep.push_back({"E" + std::to_string(i + 1), 1});
                    lab += (lab.empty() ? "" : "+") + std::string("E") + std::to_string(i + 1);
                }
            }
            r.label = lab.empty() ? "0" : lab;
            rows.push_back(r);
        }
        return rows;
    }
    if (fam == "g3") {
        std::vector<CatalogRow> base = {
            {"0", {}, {0, 0}},
            {"x2", {{"x2", 1}}, {0, 1}},
            {"x1", {{"x1", 1}}, {1, 0}},
            {"x2+x5", {{"x2", 1}, {"x5", 1}}, {2, 4}},
            {"x1+x2", {{"x1", 1}, {"x2", 1}}, {6, 10}},
        };
        std::vector<CatalogRow> rows;
        for (auto& r : base) rows.push_back({r.label, r.rep, {0, r.exponents[0], r.exponents[1]}});
        for (auto& r : base) {
            CatalogRow s{r.label == "0" ? "E" : (r.rep.size() > 1 ? "E+(" + r.label + ")" : "E+" + r.label), r.rep,
                         {1, r.exponents[0], r.exponents[1]}};
            s.rep.push_back({"E", 1});
            rows.push_back(s);
        }
        return rows;
    }
    if (fam == "f4") {
        std::vector<CatalogRow> base = {
            {"e(7)", {{"R1,-2", 1}, {"R2,-3", 1}, {"R3,0", 1}}, {6, 10, 6}},
            {"e(5,1^2)", {{"R1,-2", 1}, {"R2,0", 1}}, {4, 6, 3}},
            {"e(3^2,1)", {{"R1,-3", 1}, {"R2,3", 1}}, {2, 4, 2}},
            {"e(3,2^2)", {{"R1,0", 1}, {"R2,3", 1}}, {2, 3, 2}},
            {"e(3,1^4)", {{"R1,0", 1}}, {2, 2, 1}},
            {"e(2^2,1^3)", {{"R1,2", 1}}, {1, 2, 1}},
            {"0", {}, {0, 0, 0}},
        };
        std::vector<CatalogRow> rows;
        for (auto& r : base) {
            std::vector<int> ex = {0};
            ex.insert(ex.end(), r.exponents.begin(), r.exponents.end());
            rows.push_back({r.label, r.rep, ex});
        }
        for (auto& r : base) {
            std::vector<int> ex = {1};
            ex.insert(ex.end(), r.exponents.begin(), r.exponents.end());
            CatalogRow s{r.label == "0" ? "E" : "E+" + r.label, r.rep, ex};
            s.rep.push_back({"E", 1});
            rows.push_back(s);
        }
        return rows;
    }
    throw Error("BadParams", "no orbit catalog for " + fam);
}

std::string normalize(std::string s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), s.end());
    return s;
}

}

std::vector<OrbitSpec> exceptional_orbit_catalog(const SuperAlgebra& a)
{
    if (!a.has_weights()) throw Error("BadParams", "algebra carries no torus weights");
    std::vector<OrbitSpec> out;
    for (auto& r : rows_for(a.kind().family)) {
        OrbitSpec o;
        o.label = r.label;
        o.exponents = r.exponents;
        o.rep = a.zero();
        for (auto& [n, c] : r.rep) o.rep[a.index(n)] += Scalar(a.field(), c);
        o.degree.resize(a.dim());
        for (size_t i = 0; i < a.dim(); ++i) {
            int d = 0;
            for (size_t k = 0; k < r.exponents.size(); ++k) d += r.exponents[k] * a.weight(i)[k];
            o.degree[i] = d;
        }
        validate(a, o);
        out.push_back(std::move(o));
    }
    return out;
}

OrbitSpec find_orbit(const SuperAlgebra& a, const std::string& label)
{
    if (a.realization()) return nilpotent_from_partition(a, Partition::parse(label));
    std::string want = normalize(label);
    for (auto& r : rows_for(a.kind().family))
        if (normalize(r.label) == want) {
            for (auto& o : exceptional_orbit_catalog(a))
                if (o.label == r.label) return o;
        }
    throw Error("UnknownOrbit", "no orbit labelled " + label + " for " + a.kind().family);
}

Subspace degree_piece(const SuperAlgebra& a, const OrbitSpec& o, int j)
{
    Subspace s(a.field(), a.dim());
    for (size_t i = 0; i < a.dim(); ++i)
        if (o.degree[i] == j) s.add(a.unit(i));
    return s;
}

std::map<int, Subspace> tau_grading(const SuperAlgebra& a, const OrbitSpec& o)
{
    std::map<int, Subspace> out;
    for (size_t i = 0; i < a.dim(); ++i) {
        auto it = out.find(o.degree[i]);
        if (it == out.end()) it = out.emplace(o.degree[i], Subspace(a.field(), a.dim())).first;
        it->second.add(a.unit(i));
    }
    return out;
}

}

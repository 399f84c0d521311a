#include "superz/reachability.hpp"

#include "superz/centralizer.hpp"

namespace superz {

Vec Witness::evaluate(const SuperAlgebra& a) const
{
    Vec out = a.zero();
    for (auto& t : terms) axpy(out, t.c, a.bracket(basis[t.i], basis[t.j]));
    return out;
}

std::vector<Vec> homogeneous_basis(const SuperAlgebra& a, const Subspace& s)
{
    std::vector<Vec> out;
    for (int par = 0; par < 2; ++par) {
        Subspace piece(a.field(), a.dim());
        for (auto& v : s.basis()) {
            Vec w = a.zero();
            for (size_t i = 0; i < a.dim(); ++i)
                if (a.parity(i) == par) w[i] = v[i];
            if (!is_zero(w)) piece.add(w);
        }
        out.insert(out.end(), piece.basis().begin(), piece.basis().end());
    }
    return out;
}

namespace {

Subspace brackets_of(const SuperAlgebra& a, const std::vector<Vec>& b, const Subspace* must_lie_in)
{
    Subspace d(a.field(), a.dim());
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i; j < b.size(); ++j) {
            Vec v = a.bracket(b[i], b[j]);
            if (is_zero(v)) continue;
            if (must_lie_in && !must_lie_in->member(v))
                throw Error("NotASubalgebra", "subspace is not closed under the bracket");
            d.add(v);
        }
    return d;
}

}

Subspace derived_subspace(const SuperAlgebra& a, const Subspace& s)
{
    return brackets_of(a, homogeneous_basis(a, s), &s);
}

Subspace generated_subalgebra(const SuperAlgebra& a, const Subspace& seed, const Subspace& ambient)
{
    if (!ambient.contains(seed)) throw Error("SeedOutsideAmbient", "seed is not contained in the ambient subspace");
    std::vector<Vec> gens = homogeneous_basis(a, seed);
    Subspace cur = seed;
    std::vector<Vec> all = gens, frontier = gens;
    // each round brackets the newest elements against everything so far
    for (size_t round = 0; !frontier.empty(); ++round) {
        if (round > ambient.dim()) throw Error("NotASubalgebra", "bracket closure did not stabilise");
        std::vector<Vec> next;
        for (auto& x : frontier)
            for (auto& y : all) {
                Vec v = a.bracket(x, y);
                if (is_zero(v) || cur.member(v)) continue;
                if (!ambient.member(v)) throw Error("NotASubalgebra", "ambient subspace is not closed under the bracket");
                // brackets of homogeneous elements are homogeneous
                cur.add(v);
                next.push_back(v);
            }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return cur;
}

ReachabilityVerdict classify(const SuperAlgebra& a, const OrbitSpec& o, const std::map<int, Subspace>& graded)
{
    ReachabilityVerdict v;
    Subspace ge(a.field(), a.dim()), pos(a.field(), a.dim()), one(a.field(), a.dim());
    for (auto& [j, s] : graded) {
        ge = sum(ge, s);
        if (j >= 1) pos = sum(pos, s);
        if (j == 1) one = s;
    }
    std::vector<Vec> b = homogeneous_basis(a, ge);
    Subspace derived = brackets_of(a, b, &ge);
    v.reachable = derived.member(o.rep);
    v.strongly_reachable = derived == ge;
    v.panyushev = generated_subalgebra(a, one, pos) == pos;

    if (v.reachable) {
        std::vector<std::pair<size_t, size_t>> pairs;
        std::vector<Vec> cols;
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i; j < b.size(); ++j) {
                Vec br = a.bracket(b[i], b[j]);
                if (is_zero(br)) continue;
                pairs.push_back({i, j});
                cols.push_back(std::move(br));
            }
        Matrix M(a.field(), a.dim(), cols.size());
        for (size_t c = 0; c < cols.size(); ++c) M.set_col(c, cols[c]);
        auto x = solve(M, o.rep);
        if (!x) throw Error("Internal", "e lies in the derived span but the witness system has no solution");
        Witness w;
        w.basis = b;
        for (size_t c = 0; c < pairs.size(); ++c)
            if (!(*x)[c].is_zero()) w.terms.push_back({pairs[c].first, pairs[c].second, (*x)[c]});
        v.witness = std::move(w);
    }
    return v;
}

ReachabilityVerdict classify(const SuperAlgebra& a, const OrbitSpec& o)
{
    return classify(a, o, graded_centralizer(a, o));
}

}

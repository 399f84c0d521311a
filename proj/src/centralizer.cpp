#include "superz/centralizer.hpp"

#include <algorithm>

#include "superz/constructors.hpp"

namespace superz {

namespace {

void require_even(const SuperAlgebra& a, const Vec& e)
{
    if (a.parity_of(e) != 0) throw Error("OddElement", "centralizers are taken of even elements only");
}

// kernel of ad e restricted to the labels in cols, embedded back
Subspace kernel_on(const SuperAlgebra& a, const Vec& e, const std::vector<size_t>& cols)
{
    Subspace out(a.field(), a.dim());
    if (cols.empty()) return out;
    Matrix M(a.field(), a.dim(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) M.set_col(c, a.bracket(e, a.unit(cols[c])));
    Subspace k = kernel(M);
    for (auto& v : k.basis()) {
        Vec w = a.zero();
        for (size_t c = 0; c < cols.size(); ++c) w[cols[c]] = v[c];
        out.add(w);
    }
    return out;
}

// homogeneous spanning set of a Z2-graded subspace
std::vector<Vec> split_parity(const SuperAlgebra& a, const Subspace& s, int par)
{
    std::vector<Vec> out;
    for (auto& v : s.basis()) {
        Vec w = a.zero();
        for (size_t i = 0; i < a.dim(); ++i)
            if (a.parity(i) == par) w[i] = v[i];
        if (!is_zero(w)) out.push_back(std::move(w));
    }
    return out;
}

// elements of span(block) commuting with every y in all
std::vector<Vec> commuting_part(const SuperAlgebra& a, const std::vector<Vec>& block, const std::vector<Vec>& all)
{
    Subspace cand = Subspace::span(a.field(), a.dim(), block);
    std::vector<Vec> c = cand.basis();
    if (c.empty()) return {};
    RowSystem sys(a.field(), c.size());
    for (auto& y : all) {
        std::vector<Vec> br;
        br.reserve(c.size());
        for (auto& x : c) br.push_back(a.bracket(x, y));
        for (size_t l = 0; l < a.dim(); ++l) {
            Vec row = zero_vec(a.field(), c.size());
            bool any = false;
            for (size_t i = 0; i < c.size(); ++i)
                if (!br[i][l].is_zero()) row[i] = br[i][l], any = true;
            if (any) sys.add_equation(row);
        }
        if (sys.saturated()) return {};
    }
    std::vector<Vec> out;
    Subspace sol = sys.solutions();
    for (auto& t : sol.basis()) {
        Vec w = a.zero();
        for (size_t i = 0; i < c.size(); ++i)
            if (!t[i].is_zero()) axpy(w, t[i], c[i]);
        out.push_back(std::move(w));
    }
    return out;
}

}

Subspace centralizer(const SuperAlgebra& a, const Vec& e)
{
    require_even(a, e);
    return kernel(a.ad_matrix(e));
}

std::map<int, Subspace> graded_centralizer(const SuperAlgebra& a, const OrbitSpec& o)
{
    require_even(a, o.rep);
    std::map<int, std::vector<size_t>> cols;
    for (size_t i = 0; i < a.dim(); ++i) cols[o.degree[i]].push_back(i);
    std::map<int, Subspace> out;
    for (auto& [j, c] : cols) out.emplace(j, kernel_on(a, o.rep, c));
    return out;
}

Subspace center_of_centralizer(const SuperAlgebra& a, const std::map<int, Subspace>& graded)
{
    std::vector<std::vector<Vec>> blocks;
    std::vector<Vec> all;
    for (auto& [j, s] : graded)
        for (int par = 0; par < 2; ++par) {
            auto b = split_parity(a, s, par);
            if (b.empty()) continue;
            all.insert(all.end(), b.begin(), b.end());
            blocks.push_back(std::move(b));
        }
    Subspace z(a.field(), a.dim());
    for (auto& b : blocks)
        for (auto& v : commuting_part(a, b, all)) z.add(v);
    return z;
}

Subspace center_of_centralizer(const SuperAlgebra& a, const Vec& e)
{
    Subspace ge = centralizer(a, e);
    return center_of_centralizer(a, std::map<int, Subspace>{{0, ge}});
}

std::string XiLabel::str() const
{
    return "xi_" + std::to_string(i + 1) + "^{" + std::to_string(j + 1) + "," + std::to_string(k) + "}";
}

Matrix xi_matrix(const Field& f, const JordanLayout& L, const XiLabel& x)
{
    Matrix M(f, size_t(L.N), size_t(L.N));
    int li = L.blocks[size_t(x.i)].lambda, lj = L.blocks[size_t(x.j)].lambda;
    for (int s = 0; s < li && s + x.k < lj; ++s)
        M(size_t(L.index(size_t(x.j), s + x.k)), size_t(L.index(size_t(x.i), s))) = Scalar(f, 1);
    return M;
}

Matrix jordan_power(const Field& f, const JordanLayout& L, int k)
{
    Matrix M(f, size_t(L.N), size_t(L.N));
    for (size_t i = 0; i < L.blocks.size(); ++i)
        for (int s = 0; s + k < L.blocks[i].lambda; ++s)
            M(size_t(L.index(i, s + k)), size_t(L.index(i, s))) = Scalar(f, 1);
    return M;
}

std::vector<XiLabel> closed_form_basis_gl(const Partition& lam)
{
    std::vector<XiLabel> out;
    const auto& b = lam.blocks;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            for (int k = std::max(b[j].lambda - b[i].lambda, 0); k < b[j].lambda; ++k)
                out.push_back({int(i), int(j), k});
    return out;
}

namespace {

struct Ctx {
    const SuperAlgebra& a;
    const MatrixRealization& R;
    JordanLayout L;
    Field f;

    Vec vec(const Matrix& M) const { return R.coords(M); }
    Matrix xi(int i, int j, int k) const { return xi_matrix(f, L, {i, j, k}); }
};

Ctx context(const SuperAlgebra& a, const Partition& lam)
{
    const MatrixRealization* R = a.realization();
    if (!R) throw Error("BadParams", "closed forms exist only for the classical families");
    JordanLayout L = R->layout ? *R->layout : JordanLayout::of(lam);
    nilpotent_from_partition(a, lam);   // checks that lam fits a
    return Ctx{a, *R, L, a.field()};
}

void push(ClosedForm& cf, std::string label, Vec v)
{
    cf.labels.push_back(std::move(label));
    cf.vectors.push_back(std::move(v));
}

int sgn(int par) { return par % 2 ? -1 : 1; }

// largest power of p dividing both, 1 over Q
long common_p_power(const Field& f, long x, long y)
{
    long q = 1;
    if (!f.is_prime()) return q;
    long p = f.p();
    while (x % (q * p) == 0 && y % (q * p) == 0) q *= p;
    return q;
}

bool divides_all(const Field& f, const JordanLayout& L)
{
    if (!f.is_prime()) return false;
    for (auto& b : L.blocks)
        if (b.lambda % long(f.p())) return false;
    return true;
}

struct Combo {
    std::string label;
    Matrix m;
};

// traceless diagonal combinations; adjacent pairing, or anchored at one block when adjacent ones collapse
std::vector<Combo> diagonal_combos(const Ctx& c, std::vector<std::string>& notes)
{
    const auto& B = c.L.blocks;
    size_t r = B.size();
    auto combo = [&](size_t i, size_t j, long ci, long cj, int s) {
        Matrix m = matrix_add(Matrix(c.f, size_t(c.L.N), size_t(c.L.N)), c.xi(int(i), int(i), 0), Scalar(c.f, ci));
        m = matrix_add(m, c.xi(int(j), int(j), 0), Scalar(c.f, -s * cj));
        std::string lab = std::to_string(ci) + "*" + XiLabel{int(i), int(i), 0}.str() + (s * cj > 0 ? " - " : " + ") +
                          std::to_string(std::labs(cj)) + "*" + XiLabel{int(j), int(j), 0}.str();
        return Combo{lab, m};
    };
    std::vector<Combo> out;
    Echelon ech(c.f, size_t(c.L.N) * size_t(c.L.N));
    auto flat = [&](const Matrix& m) {
        Vec v;
        for (size_t x = 0; x < m.rows(); ++x)
            for (size_t y = 0; y < m.cols(); ++y) v.push_back(m(x, y));
        return v;
    };
    bool indep = true;
    for (size_t i = 0; i + 1 < r; ++i) {
        long q = common_p_power(c.f, B[i].lambda, B[i + 1].lambda);
        out.push_back(combo(i, i + 1, B[i + 1].lambda / q, B[i].lambda / q, sgn(B[i].parity + B[i + 1].parity)));
        indep = ech.add(flat(out.back().m)) && indep;
    }
    if (indep) return out;
    size_t i0 = 0;
    while (B[i0].lambda % long(c.f.p()) == 0) ++i0;
    out.clear();
    for (size_t i = 0; i < r; ++i)
        if (i != i0) out.push_back(combo(i, i0, B[i0].lambda, B[i].lambda, sgn(B[i].parity + B[i0].parity)));
    notes.push_back("adjacent diagonal combinations are dependent; anchored at block " + std::to_string(i0 + 1));
    return out;
}

void push_gl_part(ClosedForm& cf, const Ctx& c, bool with_diag0)
{
    const auto& B = c.L.blocks;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j)
            for (int k = std::max(B[j].lambda - B[i].lambda, 0); k < B[j].lambda; ++k) {
                if (i == j && k == 0 && !with_diag0) continue;
                XiLabel x{int(i), int(j), k};
                push(cf, x.str(), c.vec(xi_matrix(c.f, c.L, x)));
            }
}

ClosedForm basis_sl(const Ctx& c)
{
    ClosedForm cf;
    if (divides_all(c.f, c.L)) {
        cf.notes.push_back("p divides every part; the gl basis lies in sl");
        push_gl_part(cf, c, true);
        return cf;
    }
    push_gl_part(cf, c, false);
    for (auto& d : diagonal_combos(c, cf.notes)) push(cf, d.label, c.vec(d.m));
    return cf;
}

ClosedForm basis_psl(const Ctx& c)
{
    int n = std::stoi(c.a.kind().param("n"));
    if (c.f.is_prime() && n % long(c.f.p()) == 0)
        throw Error("HypothesisViolation", "closed form for psl needs p not dividing n");
    ClosedForm cf;
    push_gl_part(cf, c, false);
    auto combos = diagonal_combos(c, cf.notes);
    for (size_t drop = 0; drop < combos.size(); ++drop) {
        Subspace s = Subspace::span(c.f, c.a.dim(), cf.vectors);
        size_t want = cf.vectors.size() + combos.size() - 1;
        std::vector<Vec> extra;
        for (size_t t = 0; t < combos.size(); ++t)
            if (t != drop) {
                extra.push_back(c.vec(combos[t].m));
                s.add(extra.back());
            }
        if (s.dim() != want) continue;
        if (drop) cf.notes.push_back("dropped diagonal combination " + std::to_string(drop + 1) + " instead of the first");
        for (size_t t = 0, u = 0; t < combos.size(); ++t)
            if (t != drop) push(cf, combos[t].label, extra[u++]);
        return cf;
    }
    return cf;
}

// the one sign eps with x + eps y inside the algebra and commuting with e
Vec resolve_sign(const Ctx& c, const Matrix& x, const Matrix& y, const Vec& e, int& eps, const std::string& what)
{
    std::vector<std::pair<int, Vec>> ok;
    for (int s : {1, -1}) {
        Vec v;
        try {
            v = c.vec(matrix_add(x, y, Scalar(c.f, s)));
        } catch (const Error& err) {
            if (err.code != "NotInSubspace") throw;
            continue;
        }
        if (is_zero(c.a.bracket(e, v))) ok.push_back({s, v});
    }
    if (ok.size() != 1) throw Error("AmbiguousSign", what + ": " + std::to_string(ok.size()) + " admissible signs");
    eps = ok[0].first;
    return ok[0].second;
}

ClosedForm basis_osp(const Ctx& c, const Partition& lam)
{
    ClosedForm cf;
    const auto& B = c.L.blocks;
    const auto& P = c.R.partner;
    Vec e = nilpotent_from_partition(c.a, lam).rep;
    for (size_t i = 0; i < B.size(); ++i) {
        int li = B[i].lambda;
        for (int k = B[i].parity == 0 ? 1 : 0; k < li; k += 2) {
            XiLabel x{int(i), int(P[i]), li - 1 - k};
            push(cf, x.str(), c.vec(xi_matrix(c.f, c.L, x)));
        }
    }
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j) {
            if (P[i] == j) continue;
            if (std::make_pair(i, j) > std::make_pair(P[j], P[i])) continue;
            int li = B[i].lambda, lj = B[j].lambda;
            for (int k = 0; k < std::min(li, lj); ++k) {
                XiLabel x{int(i), int(j), lj - 1 - k}, y{int(P[j]), int(P[i]), li - 1 - k};
                int eps = 0;
                Vec v = resolve_sign(c, xi_matrix(c.f, c.L, x), xi_matrix(c.f, c.L, y), e, eps, x.str());
                push(cf, x.str() + (eps > 0 ? " + " : " - ") + y.str(), v);
            }
        }
    return cf;
}

ClosedForm powers_of_e(const Ctx& c, int from, int to, int step)
{
    ClosedForm cf;
    for (int l = from; l <= to; l += step) {
        Matrix M = jordan_power(c.f, c.L, l);
        if (M.is_zero()) continue;
        push(cf, l == 0 ? "I" : (l == 1 ? "e" : "e^" + std::to_string(l)), c.vec(M));
    }
    return cf;
}

ClosedForm center_osp(const Ctx& c, const Partition& lam, CenterReading reading)
{
    if (c.a.kind().param("pairing") != "zform")
        throw Error("HypothesisViolation", "the center theorem is stated for the form splitting V = V1 + V2");
    const auto& B = c.L.blocks;
    const auto& P = c.R.partner;
    std::vector<size_t> self, pairs;
    for (size_t i = 0; i < B.size(); ++i) {
        if (P[i] == i) self.push_back(i);
        else if (i < P[i]) pairs.push_back(i);
    }
    size_t a = self.size();
    auto lam_self = [&](size_t t) { return B[self[t]].lambda; };
    auto lam_pair = [&](size_t t) { return B[pairs[t]].lambda; };

    bool fixed = reading == CenterReading::Corrected;
    int top = fixed ? lam.largest() : 1 << 30;
    if (!fixed && a) top = std::min(top, lam_self(0));
    if (!fixed && !pairs.empty()) top = std::min(top, lam_pair(0));
    ClosedForm cf = powers_of_e(c, 1, top - 1, 2);
    Vec e = nilpotent_from_partition(c.a, lam).rep;

    bool b1 = false;
    if (fixed) {
        b1 = a >= 2 && B[self[0]].parity == 0 && (pairs.empty() || lam_self(1) > lam_pair(0));
    } else if (a >= 3) {
        bool gap = pairs.empty() || lam_self(1) > lam_pair(0);
        b1 = gap && B[self[0]].parity == 0 && B[self[1]].parity == 0;
    } else if (a == 2) {
        b1 = B[self[0]].parity != B[self[1]].parity;
    }
    if (b1) {
        XiLabel x{int(self[0]), int(self[1]), lam_self(1) - 1}, y{int(self[1]), int(self[0]), lam_self(0) - 1};
        int eps = 0;
        Vec v = resolve_sign(c, xi_matrix(c.f, c.L, x), xi_matrix(c.f, c.L, y), e, eps, x.str());
        push(cf, x.str() + (eps > 0 ? " + " : " - ") + y.str(), v);
        cf.notes.push_back("extra central vector from two self-paired blocks");
    }

    if (!pairs.empty()) {
        size_t t = pairs[0];
        int l = lam_pair(0);
        bool below = a == 0 || lam_self(0) < l;
        bool isolated = pairs.size() < 2 || l > lam_pair(1);
        if (below && isolated && B[t].parity == 0 && l % 2 == 1) {
            XiLabel x{int(t), int(t), l - 1}, y{int(P[t]), int(P[t]), l - 1};
            int eps = 0;
            Vec v = resolve_sign(c, xi_matrix(c.f, c.L, x), xi_matrix(c.f, c.L, y), e, eps, x.str());
            push(cf, x.str() + (eps > 0 ? " + " : " - ") + y.str(), v);
            cf.notes.push_back("extra central vector from the leading pair");
        }
    }
    return cf;
}

}

ClosedForm closed_form_basis(const SuperAlgebra& a, const Partition& lam)
{
    Ctx c = context(a, lam);
    const std::string& fam = a.kind().family;
    if (fam == "gl") {
        ClosedForm cf;
        push_gl_part(cf, c, true);
        return cf;
    }
    if (fam == "sl") return basis_sl(c);
    if (fam == "psl") return basis_psl(c);
    if (fam == "osp") return basis_osp(c, lam);
    throw Error("BadParams", "no closed form for " + fam);
}

ClosedForm closed_form_center(const SuperAlgebra& a, const Partition& lam, CenterReading reading)
{
    Ctx c = context(a, lam);
    const std::string& fam = a.kind().family;
    int top = lam.largest() - 1;
    if (fam == "gl") return powers_of_e(c, 0, top, 1);
    if (fam == "sl") {
        bool with_i = divides_all(c.f, c.L);
        if (reading == CenterReading::Corrected && c.f.is_prime())
            with_i = (lam.m() - lam.n()) % long(c.f.p()) == 0;
        return powers_of_e(c, with_i ? 0 : 1, top, 1);
    }
    if (fam == "psl") {
        int n = std::stoi(a.kind().param("n"));
        if (c.f.is_prime() && n % long(c.f.p()) == 0)
            throw Error("HypothesisViolation", "center formula for psl needs p not dividing n");
        return powers_of_e(c, 1, top, 1);
    }
    if (fam == "osp") return center_osp(c, lam, reading);
    throw Error("BadParams", "no closed form for " + fam);
}

}

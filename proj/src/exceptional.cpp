#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "superz/constructors.hpp"

namespace superz {

namespace {

const Field QQ = Field::rationals();

Scalar q(long a, long b = 1)
{
    return Scalar(QQ, mpq_class(a, b));
}

Matrix zeros(size_t n)
{
    return Matrix(QQ, n, n);
}

Matrix from_entries(size_t n, std::initializer_list<std::tuple<size_t, size_t, long>> es)
{
    Matrix m = zeros(n);
    for (auto [a, b, v] : es) m(a, b) = q(v);
    return m;
}

Matrix diag(std::initializer_list<long> d)
{
    Matrix m = zeros(d.size());
    size_t i = 0;
    for (long v : d) m(i, i) = q(v), ++i;
    return m;
}

Matrix comm(const Matrix& a, const Matrix& b)
{
    Matrix x = a * b, y = b * a;
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) x(i, j) -= y(i, j);
    return x;
}

Matrix lin(const std::vector<std::pair<Scalar, const Matrix*>>& terms)
{
    Matrix out = zeros(terms.front().second->rows());
    for (auto& [c, m] : terms) out = matrix_add(out, *m, c);
    return out;
}

struct Summand {
    std::vector<std::string> labels;
    std::vector<Matrix> mats;
    std::vector<std::string> coroot_names;
    std::vector<Matrix> coroots;   // diagonal in the factor basis
    size_t factor;
};

using Element = std::vector<std::pair<std::string, Scalar>>;

struct Pin {
    Element x, y, target;
};

struct Presentation {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Summand> summands;
    std::vector<size_t> factor_dims;
    std::function<std::string(const std::vector<size_t>&)> odd_label;
    std::vector<Pin> pins;
};

// sparse rows over the unknowns, kept fully reduced
class SparseSolver {
public:
    explicit SparseSolver(size_t n) : m_n(n) {}

    void add(std::map<size_t, Scalar> r)
    {
        // pivot rows carry no other pivot column, so one pass reduces r
        std::vector<std::pair<size_t, Scalar>> hits;
        for (auto& [u, v] : r)
            if (!v.is_zero() && m_piv.count(u)) hits.push_back({u, v});
        for (auto& [u, c] : hits)
            for (auto& [k, v] : m_piv.at(u)) r[k] -= c * v;
        for (auto it = r.begin(); it != r.end();)
            it = it->second.is_zero() ? r.erase(it) : std::next(it);
        if (r.empty()) return;
        size_t u = r.begin()->first;
        Scalar c = inv(r.begin()->second);
        for (auto& [k, v] : r) v = v * c;
        for (auto& [pu, row] : m_piv) {
            auto hit = row.find(u);
            if (hit == row.end()) continue;
            Scalar cc = hit->second;
            for (auto& [k, v] : r) row[k] -= cc * v;
            for (auto jt = row.begin(); jt != row.end();)
                jt = jt->second.is_zero() ? row.erase(jt) : std::next(jt);
        }
        m_piv.emplace(u, std::move(r));
    }

    std::vector<Vec> nullspace() const
    {
        std::vector<Vec> out;
        for (size_t f = 0; f < m_n; ++f) {
            if (m_piv.count(f)) continue;
            Vec x = zero_vec(QQ, m_n);
            x[f] = q(1);
            for (auto& [u, row] : m_piv) {
                auto hit = row.find(f);
                if (hit != row.end()) x[u] = -hit->second;
            }
            out.push_back(x);
        }
        return out;
    }

private:
    size_t m_n;
    std::map<size_t, std::map<size_t, Scalar>> m_piv;
};

std::vector<int> as_ints(const std::vector<Scalar>& w, const std::string& what)
{
    std::vector<int> out;
    for (auto& s : w) {
        mpq_class r = s.rational();
        if (r.get_den() != 1) throw Error("BadParams", "non-integral torus weight on " + what);
        out.push_back(int(r.get_num().get_si()));
    }
    return out;
}

SuperAlgebra build_presentation(const Presentation& P)
{
    // labels
    std::vector<Label> labels;
    std::vector<std::pair<size_t, size_t>> even_of;   // (summand, local)
    for (size_t t = 0; t < P.summands.size(); ++t)
        for (size_t l = 0; l < P.summands[t].labels.size(); ++l) {
            labels.push_back({P.summands[t].labels[l], 0});
            even_of.push_back({t, l});
        }
    size_t ne = labels.size();
    std::vector<std::vector<size_t>> tuples(1);
    for (size_t d : P.factor_dims) {
        std::vector<std::vector<size_t>> next;
        for (auto& t : tuples)
            for (size_t i = 0; i < d; ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(u);
            }
        tuples = next;
    }
    std::map<std::vector<size_t>, size_t> tuple_index;
    for (auto& t : tuples) {
        tuple_index[t] = labels.size();
        labels.push_back({P.odd_label(t), 1});
    }
    size_t dim = labels.size();
    AlgebraKind kind{P.family, P.params};
    SuperAlgebra a(QQ, kind, labels);

    // even-even
    std::vector<MatrixBasis> bases;
    for (auto& S : P.summands) bases.emplace_back(QQ, S.mats.front().rows(), S.mats);
    for (size_t i = 0; i < ne; ++i)
        for (size_t j = i + 1; j < ne; ++j) {
            auto [ti, li] = even_of[i];
            auto [tj, lj] = even_of[j];
            if (ti != tj) continue;
            const auto& S = P.summands[ti];
            Vec c = bases[ti].coords(comm(S.mats[li], S.mats[lj]));
            Sparse s;
            size_t off = i - li;
            for (size_t k = 0; k < c.size(); ++k)
                if (!c[k].is_zero()) s.push_back({uint32_t(off + k), c[k]});
            a.set_bracket(i, j, s);
        }
    // even-odd
    for (size_t i = 0; i < ne; ++i) {
        auto [t, l] = even_of[i];
        const Matrix& M = P.summands[t].mats[l];
        size_t f = P.summands[t].factor;
        for (auto& tup : tuples) {
            Sparse s;
            for (size_t r = 0; r < P.factor_dims[f]; ++r) {
                if (M(r, tup[f]).is_zero()) continue;
                auto nt = tup;
                nt[f] = r;
                s.push_back({uint32_t(tuple_index[nt]), M(r, tup[f])});
            }
            std::sort(s.begin(), s.end(), [](const Term& x, const Term& y) { return x.idx < y.idx; });
            a.set_bracket(i, tuple_index[tup], s);
        }
    }
    // torus weights
    std::vector<std::string> coroot_names;
    for (auto& S : P.summands)
        for (auto& c : S.coroot_names) coroot_names.push_back(c);
    std::vector<std::vector<int>> wts;
    for (size_t i = 0; i < ne; ++i) {
        auto [t, l] = even_of[i];
        std::vector<Scalar> w;
        for (size_t tt = 0; tt < P.summands.size(); ++tt)
            for (auto& h : P.summands[tt].coroots) {
                if (tt != t) {
                    w.push_back(q(0));
                    continue;
                }
                const Matrix& M = P.summands[t].mats[l];
                Matrix c = comm(h, M);
                Scalar ratio;
                bool found = false;
                for (size_t r = 0; r < M.rows() && !found; ++r)
                    for (size_t s = 0; s < M.cols() && !found; ++s)
                        if (!M(r, s).is_zero()) ratio = c(r, s) / M(r, s), found = true;
                for (size_t r = 0; r < M.rows(); ++r)
                    for (size_t s = 0; s < M.cols(); ++s)
                        if (c(r, s) != ratio * M(r, s)) throw Error("BadParams", labels[i].name + " is not a weight vector");
                w.push_back(ratio);
            }
        wts.push_back(as_ints(w, labels[i].name));
    }
    for (auto& tup : tuples) {
        std::vector<Scalar> w;
        for (auto& S : P.summands)
            for (auto& h : S.coroots) w.push_back(h(tup[S.factor], tup[S.factor]));
        wts.push_back(as_ints(w, labels[tuple_index[tup]].name));
    }

    // odd-odd unknowns (a <= b odd, k even of weight wt a + wt b)
    std::map<std::tuple<size_t, size_t, size_t>, size_t> unknowns;
    std::vector<std::vector<std::vector<std::pair<size_t, size_t>>>> oo(dim, std::vector<std::vector<std::pair<size_t, size_t>>>(dim));
    std::vector<std::tuple<size_t, size_t, size_t>> unk_list;
    for (size_t x = ne; x < dim; ++x)
        for (size_t y = x; y < dim; ++y) {
            std::vector<int> s(wts[x].size());
            for (size_t c = 0; c < s.size(); ++c) s[c] = wts[x][c] + wts[y][c];
            for (size_t k = 0; k < ne; ++k)
                if (wts[k] == s) {
                    size_t u = unk_list.size();
                    unknowns[{x, y, k}] = u;
                    unk_list.push_back({x, y, k});
                    oo[x][y].push_back({k, u});
                }
        }
    auto pair_terms = [&](size_t x, size_t y) -> const std::vector<std::pair<size_t, size_t>>& {
        return x <= y ? oo[x][y] : oo[y][x];
    };
    size_t U = unk_list.size();
    SparseSolver solver(U);
    std::vector<std::vector<Sparse>> table(dim, std::vector<Sparse>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) table[i][j] = a.bracket_basis(i, j);

    // equivariance [g,[x,y]] = [[g,x],y] + [x,[g,y]]
    for (size_t g = 0; g < ne; ++g)
        for (size_t x = ne; x < dim; ++x)
            for (size_t y = x; y < dim; ++y) {
                std::map<size_t, std::map<size_t, Scalar>> eq;
                for (auto [k, u] : pair_terms(x, y))
                    for (auto& t : table[g][k]) eq[t.idx][u] += t.c;
                for (auto& t : table[g][x])
                    for (auto [k, u] : pair_terms(t.idx, y)) eq[k][u] -= t.c;
                for (auto& t : table[g][y])
                    for (auto [k, u] : pair_terms(x, t.idx)) eq[k][u] -= t.c;
                for (auto& [k, row] : eq) solver.add(row);
            }
    // odd Jacobi: sum over cyclic (x,y,z) of [[x,y],z] = 0
    for (size_t x = ne; x < dim; ++x)
        for (size_t y = x; y < dim; ++y)
            for (size_t z = y; z < dim; ++z) {
                std::map<size_t, std::map<size_t, Scalar>> eq;
                for (auto [p1, p2, p3] : {std::tuple{y, z, x}, std::tuple{z, x, y}, std::tuple{x, y, z}})
                    for (auto [k, u] : pair_terms(p1, p2))
                        for (auto& t : table[k][p3]) eq[t.idx][u] += t.c;
                for (auto& [o, row] : eq) solver.add(row);
            }
    std::vector<Vec> sols = solver.nullspace();
    size_t r = sols.size();

    // normalization pins: solve sum_s t_s [x,y]_s = target
    auto resolve = [&](const Element& e) {
        Vec v = zero_vec(QQ, dim);
        for (auto& [n, c] : e) v[a.index(n)] += c;
        return v;
    };
    std::vector<Vec> rows;
    Vec rhs;
    for (auto& pin : P.pins) {
        Vec x = resolve(pin.x), y = resolve(pin.y), tgt = resolve(pin.target);
        std::vector<Vec> cols(r, zero_vec(QQ, ne));
        for (size_t i = ne; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = ne; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                for (auto [k, u] : pair_terms(i, j))
                    for (size_t s = 0; s < r; ++s)
                        if (!sols[s][u].is_zero()) cols[s][k] += x[i] * y[j] * sols[s][u];
            }
        }
        for (size_t k = 0; k < ne; ++k) {
            Vec row(r);
            for (size_t s = 0; s < r; ++s) row[s] = cols[s][k];
            rows.push_back(row);
            rhs.push_back(tgt[k]);
        }
    }
    Matrix A(QQ, rows.size(), r);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t s = 0; s < r; ++s) A(i, s) = rows[i][s];
    if (rank(A) != r)
        throw Error("UnderdeterminedNormalization",
                    P.family + ": the normalization anchors leave " + std::to_string(r - rank(A)) + " free parameters");
    auto t = solve(A, rhs);
    if (!t) throw Error("AnchorInconsistent", P.family + ": the normalization anchors cannot all hold");

    std::map<std::pair<size_t, size_t>, Sparse> odd;
    for (size_t u = 0; u < U; ++u) {
        Scalar c(QQ, 0);
        for (size_t s = 0; s < r; ++s) c += (*t)[s] * sols[s][u];
        if (c.is_zero()) continue;
        auto [x, y, k] = unk_list[u];
        odd[{x, y}].push_back({uint32_t(k), c});
    }
    for (auto& [xy, s] : odd) {
        std::sort(s.begin(), s.end(), [](const Term& p1, const Term& p2) { return p1.idx < p2.idx; });
        a.set_bracket(xy.first, xy.second, s);
    }
    a.set_weights(coroot_names, wts);
    a.add_note("odd-odd constants: " + std::to_string(U) + " weight-compatible unknowns, solution space of dimension " +
               std::to_string(r) + " fixed by " + std::to_string(P.pins.size()) + " anchor(s)");
    return a;
}

Summand sl2_summand(const std::string& suffix, size_t factor, const std::string& coroot)
{
    Summand s;
    s.labels = {"E" + suffix, "H" + suffix, "F" + suffix};
    s.mats = {from_entries(2, {{0, 1, 1}}), diag({1, -1}), from_entries(2, {{1, 0, 1}})};
    s.coroot_names = {coroot};
    s.coroots = {diag({1, -1})};
    s.factor = factor;
    return s;
}

std::string sgn(size_t i)
{
    return i == 0 ? "1" : "-1";
}

Presentation d21_presentation(const Scalar& alpha)
{
    Presentation P;
    P.family = "d21";
    P.params = {{"alpha", alpha.str()}};
    for (size_t i = 0; i < 3; ++i)
        P.summands.push_back(sl2_summand(std::to_string(i + 1), i, "h_alpha" + std::to_string(i + 1)));
    P.factor_dims = {2, 2, 2};
    P.odd_label = [](const std::vector<size_t>& t) { return "v(" + sgn(t[0]) + "," + sgn(t[1]) + "," + sgn(t[2]) + ")"; };
    Scalar s2 = q(-1), s3 = -alpha;
    Scalar four = q(4);
    Element u1{{"v(1,1,-1)", q(1)}, {"v(-1,1,1)", q(-1)}};
    Element u2{{"v(1,-1,1)", q(1)}, {"v(-1,1,1)", q(-1)}};
    P.pins.push_back({u1, u1, {{"E2", four * s2}}});
    P.pins.push_back({u2, u2, {{"E3", four * s3}}});
    return P;
}

const long V7[7] = {3, 2, 1, 0, -1, -2, -3};

Presentation g3_presentation()
{
    Presentation P;
    P.family = "g3";
    P.summands.push_back(sl2_summand("", 0, "h_alpha0"));
    Matrix x1 = from_entries(7, {{0, 1, -1}, {2, 3, 1}, {3, 4, -2}, {5, 6, 1}});
    Matrix x2 = from_entries(7, {{1, 2, 1}, {4, 5, -1}});
    Matrix y1 = from_entries(7, {{1, 0, -1}, {3, 2, 2}, {4, 3, -1}, {6, 5, 1}});
    Matrix y2 = from_entries(7, {{2, 1, 1}, {5, 4, -1}});
    Matrix h1 = diag({1, -1, 2, 0, -2, 1, -1});
    Matrix h2 = diag({0, 1, -1, 0, 1, -1, 0});
    Matrix x3 = comm(x1, x2), x4 = comm(x1, x3), x5 = comm(x1, x4), x6 = comm(x5, x2);
    Matrix y3 = comm(y1, y2), y4 = comm(y1, y3), y5 = comm(y1, y4), y6 = comm(y5, y2);
    Summand g2;
    g2.labels = {"x1", "x2", "x3", "x4", "x5", "x6", "y1", "y2", "y3", "y4", "y5", "y6", "h1", "h2"};
    g2.mats = {x1, x2, x3, x4, x5, x6, y1, y2, y3, y4, y5, y6, h1, h2};
    g2.coroot_names = {"h_alpha1", "h_alpha2"};
    g2.coroots = {h1, h2};
    g2.factor = 1;
    P.summands.push_back(g2);
    P.factor_dims = {2, 7};
    P.odd_label = [](const std::vector<size_t>& t) { return "v" + sgn(t[0]) + "e" + std::to_string(V7[t[1]]); };
    P.pins.push_back({{{"v1e3", q(1)}}, {{"v1e-3", q(1)}, {"v-1e-2", q(-1)}}, {{"E", q(16)}, {"x1", q(4)}}});
    return P;
}

const int SO7_ORDER[7] = {1, 2, 3, 0, -3, -2, -1};

std::string spin_label(const std::vector<int>& s)
{
    std::string out;
    for (int x : s) out += "e" + std::to_string(x);
    return out + "s";
}

Presentation f4_presentation()
{
    Presentation P;
    P.family = "f4";
    P.summands.push_back(sl2_summand("", 0, "h_alpha0"));
    std::vector<std::vector<int>> subs = {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    auto sidx = [&](const std::vector<int>& s) {
        for (size_t i = 0; i < subs.size(); ++i)
            if (subs[i] == s) return i;
        throw Error("BadParams", "bad spin index");
    };
    // Clifford action on the spin module
    auto cl = [&](int a) {
        Matrix M = zeros(8);
        for (auto& s : subs) {
            if (a == 0) {
                M(sidx(s), sidx(s)) = q(s.size() % 2 ? -1 : 1);
                continue;
            }
            int i = a > 0 ? a : -a;
            bool in = std::find(s.begin(), s.end(), i) != s.end();
            long sign = 1;
            for (int t : s)
                if (t < i) sign = -sign;
            if (a > 0 && !in) {
                auto t = s;
                t.push_back(i);
                std::sort(t.begin(), t.end());
                M(sidx(t), sidx(s)) = q(sign);
            } else if (a < 0 && in) {
                std::vector<int> t;
                for (int x : s)
                    if (x != i) t.push_back(x);
                M(sidx(t), sidx(s)) = q(sign);
            }
        }
        return M;
    };
    auto rho = [&](int a, int b) {
        Matrix c = comm(cl(a), cl(b));
        Matrix out = zeros(8);
        return matrix_add(out, c, q(1, 2));
    };
    Summand so7;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            int a = SO7_ORDER[i], b = SO7_ORDER[j];
            so7.labels.push_back("R" + std::to_string(a) + "," + std::to_string(b));
            so7.mats.push_back(rho(a, b));
        }
    Matrix r11 = rho(1, -1), r22 = rho(2, -2), r33 = rho(3, -3);
    so7.coroot_names = {"h_alpha1", "h_alpha2", "h_alpha3"};
    so7.coroots = {lin({{q(1), &r11}, {q(-1), &r22}}), lin({{q(1), &r22}, {q(-1), &r33}}), lin({{q(2), &r33}})};
    so7.factor = 1;
    P.summands.push_back(so7);
    P.factor_dims = {2, 8};
    P.odd_label = [subs](const std::vector<size_t>& t) { return "v" + sgn(t[0]) + spin_label(subs[t[1]]); };
    Element x{{"v1e1s", q(1)}, {"v-1e1e2e3s", q(-1)}};
    P.pins.push_back({x, x, {{"R1,0", q(1)}}});
    return P;
}

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const SuperAlgebra>> cache;

std::shared_ptr<const SuperAlgebra> cached(const std::string& key, const std::function<Presentation()>& make)
{
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto a = std::make_shared<const SuperAlgebra>(build_presentation(make()));
    cache[key] = a;
    return a;
}

SuperAlgebra into(const SuperAlgebra& a, const Field& f)
{
    return f.is_rational() ? a : a.reduced(f);
}

void gate(const Field& f, std::initializer_list<uint32_t> bad, const std::string& fam, bool allow)
{
    if (!f.is_prime() || allow) return;
    for (uint32_t b : bad)
        if (f.p() == b) throw Error("BadPrime", std::to_string(b) + " is a bad prime for " + fam);
}

}

SuperAlgebra build_d21(const Scalar& alpha, const Field& f, bool allow_bad_prime)
{
    gate(f, {2}, "D(2,1;alpha)", allow_bad_prime);
    if (alpha.bound() && alpha.field() != f) throw Error("FieldMismatch", "alpha lives in another field");
    if (alpha.is_zero() || (alpha + Scalar(f, 1)).is_zero()) throw Error("BadAlpha", "alpha must avoid 0 and -1");
    mpq_class aq = f.is_rational() ? alpha.rational() : mpq_class(long(alpha.residue()));
    Scalar aQ(QQ, aq);
    auto a = cached("d21:" + aQ.str(), [&] { return d21_presentation(aQ); });
    SuperAlgebra out = into(*a, f);
    return out;
}

SuperAlgebra build_g3(const Field& f, bool allow_bad_prime)
{
    gate(f, {2, 3}, "G(3)", allow_bad_prime);
    return into(*cached("g3", g3_presentation), f);
}

SuperAlgebra build_f4(const Field& f, bool allow_bad_prime)
{
    gate(f, {2, 3}, "F(4)", allow_bad_prime);
    return into(*cached("f4", f4_presentation), f);
}

}

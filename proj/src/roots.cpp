#include "superz/roots.hpp"

#include <algorithm>
#include <sstream>

#include "superz/linalg.hpp"

namespace superz {

WeightVector WeightVector::operator-() const
{
    WeightVector w = *this;
    for (auto& c : w.coords) c = -c;
    return w;
}

std::string WeightVector::str(const std::vector<std::string>& names) const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        mpq_class c = coords[i];
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        mpq_class a = abs(c);
        if (a != 1) os << a.get_str();
        os << names[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

mpq_class RootSystem::form(const WeightVector& a, const WeightVector& b) const
{
    mpq_class s = 0;
    for (size_t i = 0; i < a.coords.size(); ++i)
        for (size_t j = 0; j < b.coords.size(); ++j)
            if (gram[i][j] != 0) s += a.coords[i] * gram[i][j] * b.coords[j];
    return s;
}

mpq_class pairing(const WeightVector& beta, const WeightVector& alpha, const RootSystem& rs)
{
    mpq_class aa = rs.form(alpha, alpha), ab = rs.form(alpha, beta);
    if (aa != 0) return 2 * ab / aa;
    return ab != 0 ? mpq_class(-1) : mpq_class(0);
}

std::vector<mpq_class> simple_coords(const SimpleSystem& pi, const WeightVector& w)
{
    Field Q = Field::rationals();
    size_t d = w.coords.size(), l = pi.simples.size();
    Matrix A(Q, d, l);
    Vec b(d);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < l; ++j) A(i, j) = Scalar(Q, pi.simples[j].coords[i]);
        b[i] = Scalar(Q, w.coords[i]);
    }
    auto x = solve(A, b);
    if (!x) return {};
    std::vector<mpq_class> out;
    for (auto& s : *x) out.push_back(s.rational());
    return out;
}

HighestRoot highest_root(const RootSystem& rs, const SimpleSystem& pi)
{
    HighestRoot h;
    std::vector<std::vector<long>> coeffs;
    for (auto& r : rs.roots) {
        auto c = simple_coords(pi, r);
        if (c.empty()) throw Error("NotAPositiveSystem", "root outside the span of the simple roots");
        bool pos = true, neg = true;
        std::vector<long> ic;
        for (auto& x : c) {
            if (x.get_den() != 1) throw Error("NotAPositiveSystem", "root with a non-integral expansion");
            pos = pos && x >= 0;
            neg = neg && x <= 0;
            ic.push_back(x.get_num().get_si());
        }
        if (!pos && !neg) throw Error("NotAPositiveSystem", "root with coefficients of both signs");
        if (pos) {
            h.positive.push_back(r);
            coeffs.push_back(ic);
        }
    }
    for (size_t i = 0; i < coeffs.size(); ++i) {
        bool top = true;
        for (size_t j = 0; j < coeffs.size() && top; ++j)
            for (size_t k = 0; k < coeffs[i].size(); ++k)
                if (coeffs[j][k] > coeffs[i][k]) {
                    top = false;
                    break;
                }
        if (top) {
            h.root = h.positive[i];
            h.coeffs = coeffs[i];
            return h;
        }
    }
    throw Error("NotAPositiveSystem", "no root dominates the positive system");
}

namespace {

using Q = mpq_class;

bool odd(const Q& x)
{
    return x.get_den() == 1 && mpz_odd_p(x.get_num().get_mpz_t());
}

WeightVector wv(std::vector<Q> c, int parity)
{
    return {std::move(c), parity};
}

// A(m,n): roots e_i - e_j
ListedSystem type_a(int m, int n)
{
    size_t N = size_t(m + n);
    RootSystem rs;
    rs.family = "A";
    std::vector<int> eta(N, 0);
    for (size_t i = size_t(m); i < N; ++i) eta[i] = 1;
    for (size_t i = 0; i < N; ++i) rs.coord_names.push_back("eps" + std::to_string(i + 1));
    rs.gram.assign(N, std::vector<Q>(N, 0));
    for (size_t i = 0; i < N; ++i) rs.gram[i][i] = eta[i] ? -1 : 1;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            std::vector<Q> c(N, 0);
            c[i] = 1;
            c[j] = -1;
            rs.roots.push_back(wv(c, (eta[i] + eta[j]) % 2));
        }
    SimpleSystem pi{"standard", {}};
    for (size_t i = 0; i + 1 < N; ++i) {
        std::vector<Q> c(N, 0);
        c[i] = 1;
        c[i + 1] = -1;
        pi.simples.push_back(wv(c, (eta[i] + eta[i + 1]) % 2));
    }
    return {rs, pi};
}

// osp(m|2n) with coordinates eps_1..eps_{l+n} of parities eta
RootSystem osp_roots(int m, const std::vector<int>& eta)
{
    size_t d = eta.size();
    RootSystem rs;
    rs.family = m % 2 ? "B" : "D";
    for (size_t i = 0; i < d; ++i) rs.coord_names.push_back(std::string(eta[i] ? "eps1_" : "eps0_") + std::to_string(i + 1));
    rs.gram.assign(d, std::vector<Q>(d, 0));
    for (size_t i = 0; i < d; ++i) rs.gram[i][i] = eta[i] ? -1 : 1;
    auto add = [&](std::vector<Q> c, int par) {
        rs.roots.push_back(wv(c, par));
        for (auto& x : c) x = -x;
        rs.roots.push_back(wv(c, par));
    };
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            for (int s : {1, -1}) {
                std::vector<Q> c(d, 0);
                c[i] = 1;
                c[j] = s;
                add(c, (eta[i] + eta[j]) % 2);
            }
    for (size_t i = 0; i < d; ++i) {
        std::vector<Q> c(d, 0);
        if (eta[i]) {
            c[i] = 2;
            add(c, 0);
            if (m % 2) {
                c[i] = 1;
                add(c, 1);
            }
        } else if (m % 2) {
            c[i] = 1;
            add(c, 0);
        }
    }
    return rs;
}

std::vector<int> ordering(int l, int n, bool evens_first)
{
    std::vector<int> eta;
    for (int i = 0; i < l + n; ++i) eta.push_back(evens_first ? (i >= l) : (i < n));
    return eta;
}

WeightVector diff(size_t d, size_t i, size_t j, const std::vector<int>& eta)
{
    std::vector<Q> c(d, 0);
    c[i] = 1;
    c[j] = -1;
    return wv(c, (eta[i] + eta[j]) % 2);
}

std::vector<ListedSystem> type_bd(int m, int n)
{
    int l = m / 2;
    size_t d = size_t(l + n);
    std::vector<ListedSystem> out;
    if (m % 2) {
        std::vector<bool> orders = {true};
        if (l > 0) orders.push_back(false);
        for (bool ef : orders) {
            auto eta = ordering(l, n, ef);
            SimpleSystem pi{ef ? "Pi(0^l,1^n)" : "Pi(1^n,0^l)", {}};
            for (size_t i = 0; i + 1 < d; ++i) pi.simples.push_back(diff(d, i, i + 1, eta));
            std::vector<Q> c(d, 0);
            c[d - 1] = 1;
            pi.simples.push_back(wv(c, eta[d - 1]));
            out.push_back({osp_roots(m, eta), pi});
        }
        return out;
    }
    // Pi_1: last coordinate odd
    {
        auto eta = ordering(l, n, true);
        SimpleSystem pi{"Pi1", {}};
        for (size_t i = 0; i + 1 < d; ++i) pi.simples.push_back(diff(d, i, i + 1, eta));
        std::vector<Q> c(d, 0);
        c[d - 1] = 2;
        pi.simples.push_back(wv(c, 0));
        out.push_back({osp_roots(m, eta), pi});
    }
    // Pi_2: eps_{l+n-1} + eps_{l+n} closes the chain
    if (l >= 1) {
        auto eta = ordering(l, n, false);
        SimpleSystem pi{"Pi2", {}};
        for (size_t i = 0; i + 1 < d; ++i) pi.simples.push_back(diff(d, i, i + 1, eta));
        std::vector<Q> c(d, 0);
        c[d - 2] = 1;
        c[d - 1] = 1;
        pi.simples.push_back(wv(c, (eta[d - 2] + eta[d - 1]) % 2));
        out.push_back({osp_roots(m, eta), pi});
    }
    return out;
}

std::vector<ListedSystem> type_d21(const Q& alpha)
{
    RootSystem rs;
    rs.family = "D21";
    rs.coord_names = {"beta1", "beta2", "beta3"};
    rs.gram = {{Q(1, 2), 0, 0}, {0, -(alpha + 1) / 2, 0}, {0, 0, alpha / 2}};
    for (size_t i = 0; i < 3; ++i)
        for (int s : {2, -2}) {
            std::vector<Q> c(3, 0);
            c[i] = s;
            rs.roots.push_back(wv(c, 0));
        }
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1}) rs.roots.push_back(wv({a, b, c}, 1));
    std::vector<std::vector<std::vector<Q>>> pis = {
        {{2, 0, 0}, {-1, 1, -1}, {0, 0, 2}},
        {{2, 0, 0}, {-1, -1, 1}, {0, 2, 0}},
        {{0, 0, 2}, {1, -1, -1}, {0, 2, 0}},
        {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}},
    };
    std::vector<ListedSystem> out;
    int k = 1;
    for (auto& p : pis) {
        SimpleSystem pi{"Pi" + std::to_string(k++), {}};
        for (auto& c : p) pi.simples.push_back(wv(c, odd(c[0]) || odd(c[1]) ? 1 : 0));
        out.push_back({rs, pi});
    }
    return out;
}

// coordinates (delta, eps1, eps2) with eps3 = -eps1 - eps2
std::vector<ListedSystem> type_g3()
{
    RootSystem rs;
    rs.family = "G3";
    rs.coord_names = {"delta", "eps1", "eps2"};
    rs.gram = {{2, 0, 0}, {0, -2, 1}, {0, 1, -2}};
    std::vector<std::vector<Q>> eps = {{0, 1, 0}, {0, 0, 1}, {0, -1, -1}};
    std::vector<Q> delta = {1, 0, 0};
    auto lin = [](std::vector<std::pair<int, std::vector<Q>>> t) {
        std::vector<Q> c(3, 0);
        for (auto& [k, v] : t)
            for (size_t i = 0; i < 3; ++i) c[i] += k * v[i];
        return c;
    };
    for (int s : {2, -2}) rs.roots.push_back(wv(lin({{s, delta}}), 0));
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j)
            if (i != j) rs.roots.push_back(wv(lin({{1, eps[i]}, {-1, eps[j]}}), 0));
        for (int s : {1, -1}) rs.roots.push_back(wv(lin({{s, eps[i]}}), 0));
    }
    for (int s : {1, -1}) {
        rs.roots.push_back(wv(lin({{s, delta}}), 1));
        for (size_t i = 0; i < 3; ++i)
            for (int t : {1, -1}) rs.roots.push_back(wv(lin({{s, delta}, {t, eps[i]}}), 1));
    }
    std::vector<std::vector<std::vector<Q>>> pis = {
        {lin({{1, delta}, {1, eps[2]}}), eps[0], lin({{1, eps[1]}, {-1, eps[0]}})},
        {lin({{-1, delta}, {-1, eps[2]}}), lin({{1, delta}, {-1, eps[1]}}), lin({{1, eps[1]}, {-1, eps[0]}})},
        {delta, lin({{-1, delta}, {1, eps[0]}}), lin({{1, eps[1]}, {-1, eps[0]}})},
        {eps[0], lin({{-1, delta}, {1, eps[1]}}), lin({{1, delta}, {-1, eps[0]}})},
    };
    std::vector<ListedSystem> out;
    int k = 1;
    for (auto& p : pis) {
        SimpleSystem pi{"Pi" + std::to_string(k++), {}};
        for (auto& c : p) pi.simples.push_back(wv(c, odd(c[0]) ? 1 : 0));
        out.push_back({rs, pi});
    }
    return out;
}

// coordinates (delta, eps1, eps2, eps3)
std::vector<ListedSystem> type_f4()
{
    RootSystem rs;
    rs.family = "F4";
    rs.coord_names = {"delta", "eps1", "eps2", "eps3"};
    rs.gram = {{-6, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
    for (int s : {1, -1}) rs.roots.push_back(wv({s, 0, 0, 0}, 0));
    for (size_t i = 1; i < 4; ++i) {
        for (int s : {1, -1}) {
            std::vector<Q> c(4, 0);
            c[i] = s;
            rs.roots.push_back(wv(c, 0));
        }
        for (size_t j = i + 1; j < 4; ++j)
            for (int s : {1, -1})
                for (int t : {1, -1}) {
                    std::vector<Q> c(4, 0);
                    c[i] = s;
                    c[j] = t;
                    rs.roots.push_back(wv(c, 0));
                }
    }
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1})
                for (int d : {1, -1}) rs.roots.push_back(wv({Q(a, 2), Q(b, 2), Q(c, 2), Q(d, 2)}, 1));
    Q h(1, 2);
    std::vector<std::vector<std::vector<Q>>> pis = {
        {{h, -h, -h, -h}, {0, 0, 0, 1}, {0, 0, 1, -1}, {0, 1, -1, 0}},
        {{-h, h, h, h}, {h, -h, -h, h}, {0, 0, 1, -1}, {0, 1, -1, 0}},
        {{0, 1, -1, 0}, {h, -h, h, -h}, {-h, h, h, -h}, {0, 0, 0, 1}},
        {{h, h, -h, -h}, {h, -h, h, h}, {-h, h, -h, h}, {0, 0, 1, -1}},
        {{1, 0, 0, 0}, {-h, h, -h, -h}, {0, 0, 0, 1}, {0, 0, 1, -1}},
        {{1, 0, 0, 0}, {-h, -h, h, h}, {0, 1, -1, 0}, {0, 0, 1, -1}},
    };
    std::vector<ListedSystem> out;
    int k = 1;
    for (auto& p : pis) {
        SimpleSystem pi{"Pi" + std::to_string(k++), {}};
        for (auto& c : p) pi.simples.push_back(wv(c, c[0].get_den() == 2 ? 1 : 0));
        out.push_back({rs, pi});
    }
    return out;
}

int kind_int(const AlgebraKind& k, const std::string& key)
{
    std::string v = k.param(key);
    if (v.empty()) throw Error("BadParams", k.family + " needs parameter " + key);
    return std::stoi(v);
}

}

std::vector<ListedSystem> listed_systems(const AlgebraKind& kind)
{
    const std::string& f = kind.family;
    if (f == "gl" || f == "sl" || f == "psl") return {type_a(kind_int(kind, "m"), kind_int(kind, "n"))};
    if (f == "osp") return type_bd(kind_int(kind, "m"), kind_int(kind, "n"));
    if (f == "d21") {
        std::string a = kind.param("alpha", "1");
        return type_d21(Q(a));
    }
    if (f == "g3") return type_g3();
    if (f == "f4") return type_f4();
    throw Error("BadParams", "no root data for " + f);
}

bool is_good_prime(const AlgebraKind& kind, uint32_t p)
{
    for (auto& ls : listed_systems(kind)) {
        auto h = highest_root(ls.roots, ls.pi);
        for (long a : h.coeffs)
            if (long(p) <= a) return false;
    }
    return true;
}

}

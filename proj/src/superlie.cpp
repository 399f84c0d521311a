#include "superz/superlie.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superz {

std::string AlgebraKind::param(const std::string& key, const std::string& dflt) const
{
    for (auto& [k, v] : params)
        if (k == key) return v;
    return dflt;
}

SuperAlgebra::SuperAlgebra(const Field& f, AlgebraKind kind, std::vector<Label> basis)
    : m_field(f), m_kind(std::move(kind)), m_basis(std::move(basis))
{
    for (size_t i = 0; i < m_basis.size(); ++i) {
        if (!m_index.emplace(m_basis[i].name, i).second)
            throw Error("BadParams", "duplicate basis label " + m_basis[i].name);
    }
    m_c.resize(m_basis.size() * m_basis.size());
}

size_t SuperAlgebra::even_dim() const
{
    size_t n = 0;
    for (auto& l : m_basis) n += (l.parity == 0);
    return n;
}

size_t SuperAlgebra::index(const std::string& name) const
{
    auto it = m_index.find(name);
    if (it == m_index.end()) throw Error("UnknownLabel", "no basis label " + name);
    return it->second;
}

Sparse to_sparse(const Vec& v)
{
    Sparse s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back({uint32_t(i), v[i]});
    return s;
}

Vec to_dense(const Sparse& s, const Field& f, size_t n)
{
    Vec v = zero_vec(f, n);
    for (auto& t : s) v[t.idx] += t.c;
    return v;
}

void SuperAlgebra::set_bracket(size_t i, size_t j, const Vec& v)
{
    set_bracket(i, j, to_sparse(v));
}

void SuperAlgebra::set_bracket(size_t i, size_t j, Sparse v)
{
    if (i > j) throw Error("BadParams", "constants are stored for i <= j only");
    int par = (parity(i) + parity(j)) % 2;
    for (auto& t : v)
        if (parity(t.idx) != par)
            throw Error("ParityViolation", "[" + m_basis[i].name + "," + m_basis[j].name + "] has a term of the wrong parity");
    if (i == j && parity(i) == 0 && !v.empty())
        throw Error("ParityViolation", "[x,x] must vanish for even x = " + m_basis[i].name);
    m_c[i * dim() + j] = std::move(v);
}

Sparse SuperAlgebra::bracket_basis(size_t i, size_t j) const
{
    if (i <= j) return stored(i, j);
    Sparse s = stored(j, i);
    bool bothOdd = parity(i) && parity(j);
    if (!bothOdd)
        for (auto& t : s) t.c = -t.c;
    return s;
}

Vec SuperAlgebra::bracket(const Vec& x, const Vec& y) const
{
    if (x.size() != dim() || y.size() != dim()) throw Error("AlgebraMismatch", "element length differs from algebra dimension");
    Vec out = zero();
    for (size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            bool swap = i > j;
            const Sparse& s = swap ? stored(j, i) : stored(i, j);
            if (s.empty()) continue;
            Scalar c = x[i] * y[j];
            if (swap && !(parity(i) && parity(j))) c = -c;
            for (auto& t : s) out[t.idx] += c * t.c;
        }
    }
    return out;
}

Matrix SuperAlgebra::ad_matrix(const Vec& x) const
{
    if (x.size() != dim()) throw Error("AlgebraMismatch", "element length differs from algebra dimension");
    Matrix m(m_field, dim(), dim());
    for (size_t j = 0; j < dim(); ++j) m.set_col(j, bracket(x, unit(j)));
    return m;
}

int SuperAlgebra::parity_of(const Vec& x) const
{
    int p = -2;
    for (size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        if (p == -2) p = parity(i);
        else if (p != parity(i)) return -1;
    }
    return p == -2 ? 0 : p;
}

std::string SuperAlgebra::show(const Vec& x) const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        std::string c = x[i].str();
        bool neg = m_field.is_rational() && !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        if (c != "1") os << c << "*";
        os << m_basis[i].name;
        first = false;
    }
    return first ? "0" : os.str();
}

void SuperAlgebra::set_weights(std::vector<std::string> coroots, std::vector<std::vector<int>> w)
{
    if (w.size() != dim()) throw Error("BadParams", "one weight vector per basis label");
    m_coroots = std::move(coroots);
    m_weights = std::move(w);
}

SuperAlgebra SuperAlgebra::reduced(const Field& f) const
{
    if (!m_field.is_rational()) throw Error("FieldMismatch", "only rational algebras can be reduced");
    SuperAlgebra r(f, m_kind, m_basis);
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = i; j < dim(); ++j) {
            Sparse s;
            for (auto& t : stored(i, j)) {
                Scalar c = reduce(t.c.rational(), f);
                if (!c.is_zero()) s.push_back({t.idx, c});
            }
            r.m_c[i * dim() + j] = std::move(s);
        }
    r.m_coroots = m_coroots;
    r.m_weights = m_weights;
    r.m_notes = m_notes;
    return r;
}

nlohmann::json SuperAlgebra::to_json() const
{
    nlohmann::json j;
    j["kind"] = m_kind.family;
    nlohmann::json params = nlohmann::json::object();
    for (auto& [k, v] : m_kind.params) params[k] = v;
    j["params"] = params;
    if (m_field.is_rational()) j["prime"] = "rational";
    else j["prime"] = std::to_string(m_field.p());
    j["dim"] = dim();
    nlohmann::json basis = nlohmann::json::array();
    for (auto& l : m_basis) basis.push_back({{"name", l.name}, {"parity", l.parity}});
    j["basis"] = basis;
    nlohmann::json cs = nlohmann::json::array();
    for (size_t a = 0; a < dim(); ++a)
        for (size_t b = a; b < dim(); ++b) {
            const Sparse& s = stored(a, b);
            if (s.empty()) continue;
            nlohmann::json co = nlohmann::json::object();
            for (auto& t : s) co[m_basis[t.idx].name] = t.c.str();
            cs.push_back({{"i", a}, {"j", b}, {"coeffs", co}});
        }
    j["constants"] = cs;
    if (!m_notes.empty()) j["notes"] = m_notes;
    return j;
}

namespace {

// accumulates sparse contributions into a dense scratch vector
struct Acc {
    Vec v;
    std::vector<uint32_t> touched;
    std::vector<char> mark;

    Acc(const Field& f, size_t n) : v(zero_vec(f, n)), mark(n, 0) {}
    void add(uint32_t i, const Scalar& c)
    {
        if (!mark[i]) {
            mark[i] = 1;
            touched.push_back(i);
        }
        v[i] += c;
    }
    bool clear_is_zero(const Field& f)
    {
        bool z = true;
        for (auto i : touched) {
            if (!v[i].is_zero()) z = false;
            v[i] = Scalar(f, 0);
            mark[i] = 0;
        }
        touched.clear();
        return z;
    }
};

// full table with both orders, for fast triple loops
std::vector<Sparse> full_table(const SuperAlgebra& a)
{
    size_t n = a.dim();
    std::vector<Sparse> t(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i * n + j] = a.bracket_basis(i, j);
    return t;
}

// (-1)^{|x||z|}[x,[y,z]] summed over graded cyclic permutations
bool triple_ok(const SuperAlgebra& a, const std::vector<Sparse>& t, size_t i, size_t j, size_t k, Acc& acc)
{
    size_t n = a.dim();
    const Field& f = a.field();
    auto term = [&](size_t x, size_t y, size_t z) {
        bool neg = a.parity(x) && a.parity(z);
        for (auto& u : t[y * n + z]) {
            Scalar c = neg ? -u.c : u.c;
            for (auto& w : t[x * n + u.idx]) acc.add(w.idx, c * w.c);
        }
    };
    term(i, j, k);
    term(j, k, i);
    term(k, i, j);
    return acc.clear_is_zero(f);
}

}

std::vector<JacobiViolation> check_super_jacobi_serial(const SuperAlgebra& a)
{
    auto t = full_table(a);
    size_t n = a.dim();
    Acc acc(a.field(), n);
    std::vector<JacobiViolation> bad;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!triple_ok(a, t, i, j, k, acc)) bad.push_back({i, j, k});
    return bad;
}

std::vector<JacobiViolation> check_super_jacobi(const SuperAlgebra& a)
{
    auto t = full_table(a);
    long n = long(a.dim());
    std::vector<std::vector<JacobiViolation>> per(static_cast<size_t>(n));
#pragma omp parallel
    {
        Acc acc(a.field(), size_t(n));
#pragma omp for schedule(dynamic)
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                for (long k = 0; k < n; ++k)
                    if (!triple_ok(a, t, size_t(i), size_t(j), size_t(k), acc))
                        per[size_t(i)].push_back({size_t(i), size_t(j), size_t(k)});
    }
    std::vector<JacobiViolation> bad;
    for (auto& v : per) bad.insert(bad.end(), v.begin(), v.end());
    return bad;
}

bool check_table(const SuperAlgebra& a)
{
    size_t n = a.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec x = to_dense(a.bracket_basis(i, j), a.field(), n);
            Vec y = to_dense(a.bracket_basis(j, i), a.field(), n);
            int par = (a.parity(i) + a.parity(j)) % 2;
            Scalar s(a.field(), (a.parity(i) && a.parity(j)) ? -1 : 1);
            for (size_t k = 0; k < n; ++k) {
                if (x[k] != -(s * y[k])) return false;
                if (!x[k].is_zero() && a.parity(k) != par) return false;
            }
        }
    return true;
}

Subspace span(const SuperAlgebra& a, const std::vector<Vec>& xs)
{
    return Subspace::span(a.field(), a.dim(), xs);
}

}

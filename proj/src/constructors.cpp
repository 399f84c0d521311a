#include "superz/constructors.hpp"

#include <memory>

namespace superz {

MatrixBasis::MatrixBasis(const Field& f, size_t n, std::vector<Matrix> mats)
    : m_field(f), m_n(n), m_mats(std::move(mats)), m_ech(f, n * n + m_mats.size())
{
    size_t d = m_mats.size();
    for (size_t i = 0; i < d; ++i) {
        Vec v = zero_vec(f, n * n + d);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) v[a * n + b] = m_mats[i](a, b);
        v[n * n + i] = Scalar(f, 1);
        m_ech.add(std::move(v));
    }
    for (size_t p : m_ech.pivots())
        if (p >= n * n) throw Error("BadParams", "matrices are linearly dependent");
}

Vec MatrixBasis::coords(const Matrix& x) const
{
    size_t d = size(), nn = m_n * m_n;
    Vec c = zero_vec(m_field, d);
    const auto& rows = m_ech.rows();
    const auto& piv = m_ech.pivots();
    for (size_t r = 0; r < rows.size(); ++r) {
        const Scalar& xv = x(piv[r] / m_n, piv[r] % m_n);
        if (xv.is_zero()) continue;
        for (size_t i = 0; i < d; ++i)
            if (!rows[r][nn + i].is_zero()) c[i] += xv * rows[r][nn + i];
    }
    Matrix back = realize(c);
    for (size_t a = 0; a < m_n; ++a)
        for (size_t b = 0; b < m_n; ++b)
            if (back(a, b) != x(a, b)) throw Error("NotInSubspace", "matrix outside the span of the basis");
    return c;
}

Matrix MatrixBasis::realize(const Vec& c) const
{
    Matrix out(m_field, m_n, m_n);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        const Matrix& m = m_mats[i];
        for (size_t a = 0; a < m_n; ++a)
            for (size_t b = 0; b < m_n; ++b)
                if (!m(a, b).is_zero()) out(a, b) += c[i] * m(a, b);
    }
    return out;
}

Matrix MatrixRealization::project(Matrix x) const
{
    if (!scalar_projection) return x;
    size_t N = n();
    Scalar t = x(N - 1, N - 1);
    if (!t.is_zero())
        for (size_t i = 0; i < N; ++i) x(i, i) -= t;
    return x;
}

Matrix identity(const Field& f, size_t n)
{
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
    return m;
}

Matrix matrix_add(const Matrix& a, const Matrix& b, const Scalar& c)
{
    Matrix out = a;
    Scalar k = c.bound() ? c : Scalar(a.field(), 1);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!b(i, j).is_zero()) out(i, j) += k * b(i, j);
    return out;
}

Matrix supercommutator(const Matrix& x, const Matrix& y, const std::vector<int>& eta)
{
    // xy - yx + 2 y1 x1 where x1, y1 are the odd parts
    Matrix out = x * y;
    Matrix yx = y * x;
    size_t n = x.rows();
    Matrix x1(x.field(), n, n), y1(x.field(), n, n);
    bool oddx = false, oddy = false;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if ((eta[a] + eta[b]) % 2) {
                if (!x(a, b).is_zero()) x1(a, b) = x(a, b), oddx = true;
                if (!y(a, b).is_zero()) y1(a, b) = y(a, b), oddy = true;
            }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) out(a, b) -= yx(a, b);
    if (oddx && oddy) {
        Matrix t = y1 * x1;
        Scalar two(x.field(), 2);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                if (!t(a, b).is_zero()) out(a, b) += two * t(a, b);
    }
    return out;
}

Scalar supertrace(const Matrix& x, const std::vector<int>& eta)
{
    Scalar s(x.field(), 0);
    for (size_t i = 0; i < x.rows(); ++i) s += eta[i] ? -x(i, i) : x(i, i);
    return s;
}

namespace {

std::string unit_name(size_t a, size_t b)
{
    return "E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

Matrix unit_matrix(const Field& f, size_t n, size_t a, size_t b)
{
    Matrix m(f, n, n);
    m(a, b) = Scalar(f, 1);
    return m;
}

std::vector<int> standard_eta(int m, int n)
{
    std::vector<int> e(size_t(m + n), 0);
    for (int i = m; i < m + n; ++i) e[size_t(i)] = 1;
    return e;
}

// fill the structure constants from a realization
SuperAlgebra realize_algebra(const Field& f, AlgebraKind kind, std::vector<Label> labels,
                             std::shared_ptr<MatrixRealization> real)
{
    SuperAlgebra a(f, std::move(kind), std::move(labels));
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = i; j < a.dim(); ++j) {
            if (i == j && a.parity(i) == 0) continue;
            Matrix c = supercommutator(real->basis[i], real->basis[j], real->eta);
            if (c.is_zero()) continue;
            a.set_bracket(i, j, real->coords(c));
        }
    a.set_realization(real);
    return a;
}

void check_mn(int m, int n)
{
    if (m < 0 || n < 0 || m + n < 1) throw Error("BadParams", "need m, n >= 0 and m + n >= 1");
}

AlgebraKind classical_kind(const std::string& fam, int m, int n)
{
    return {fam, {{"m", std::to_string(m)}, {"n", std::to_string(n)}}};
}

}

SuperAlgebra build_gl(int m, int n, const Field& f)
{
    check_mn(m, n);
    size_t N = size_t(m + n);
    auto eta = standard_eta(m, n);
    std::vector<Matrix> mats;
    std::vector<Label> labels;
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) {
            mats.push_back(unit_matrix(f, N, a, b));
            labels.push_back({unit_name(a, b), (eta[a] + eta[b]) % 2});
        }
    auto real = std::make_shared<MatrixRealization>(MatrixBasis(f, N, std::move(mats)), eta);
    return realize_algebra(f, classical_kind("gl", m, n), std::move(labels), real);
}

namespace {

// off-diagonal units, then h_a = E_aa - (-1)^{eta_a + eta_{a+1}} E_{a+1,a+1} for a < N-1 (or N-2 for psl)
void sl_basis(const Field& f, size_t N, const std::vector<int>& eta, size_t diag_count,
              std::vector<Matrix>& mats, std::vector<Label>& labels)
{
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) {
            if (a == b) continue;
            mats.push_back(unit_matrix(f, N, a, b));
            labels.push_back({unit_name(a, b), (eta[a] + eta[b]) % 2});
        }
    for (size_t a = 0; a < diag_count; ++a) {
        Matrix h(f, N, N);
        h(a, a) = Scalar(f, 1);
        h(a + 1, a + 1) = Scalar(f, (eta[a] + eta[a + 1]) % 2 ? 1 : -1);
        mats.push_back(h);
        labels.push_back({"h(" + std::to_string(a + 1) + ")", 0});
    }
}

}

SuperAlgebra build_sl(int m, int n, const Field& f)
{
    check_mn(m, n);
    if (m == n) throw Error("BadParams", "sl(n|n) is not simple; use psl");
    size_t N = size_t(m + n);
    auto eta = standard_eta(m, n);
    std::vector<Matrix> mats;
    std::vector<Label> labels;
    sl_basis(f, N, eta, N - 1, mats, labels);
    auto real = std::make_shared<MatrixRealization>(MatrixBasis(f, N, std::move(mats)), eta);
    return realize_algebra(f, classical_kind("sl", m, n), std::move(labels), real);
}

SuperAlgebra build_psl(int m, int n, const Field& f)
{
    if (m != n || n < 2) throw Error("BadParams", "psl needs m = n > 1");
    if (f.is_prime() && n % int(f.p()) == 0)
        throw Error("PslBadPrime", "psl(n|n) is excluded when p divides n");
    size_t N = size_t(2 * n);
    auto eta = standard_eta(n, n);
    std::vector<Matrix> mats;
    std::vector<Label> labels;
    sl_basis(f, N, eta, N - 2, mats, labels);
    auto real = std::make_shared<MatrixRealization>(MatrixBasis(f, N, std::move(mats)), eta);
    real->scalar_projection = true;
    return realize_algebra(f, classical_kind("psl", m, n), std::move(labels), real);
}

namespace {

bool self_type(const Block& b)
{
    return (b.parity == 0 && b.lambda % 2 == 1) || (b.parity == 1 && b.lambda % 2 == 0);
}

// partner of each block in merged order
std::vector<size_t> osp_partners(const Partition& lam, OspPairing pairing)
{
    const auto& bl = lam.blocks;
    std::vector<size_t> partner(bl.size());
    size_t i = 0;
    while (i < bl.size()) {
        size_t j = i;
        while (j < bl.size() && bl[j].lambda == bl[i].lambda && bl[j].parity == bl[i].parity) ++j;
        size_t cnt = j - i, t = i;
        if (self_type(bl[i])) {
            if (pairing == OspPairing::SForm) {
                for (; t < j; ++t) partner[t] = t;
            } else if (cnt % 2) {
                partner[t] = t;
                ++t;
            }
        }
        for (; t < j; t += 2) {
            if (t + 1 >= j) throw Error("BadPartition", "partition is not admissible for osp");
            partner[t] = t + 1;
            partner[t + 1] = t;
        }
        i = j;
    }
    return partner;
}

}

SuperAlgebra build_osp(const Partition& lam, const Field& f, OspPairing pairing, bool allow_bad_prime)
{
    int m = lam.m(), n2 = lam.n();
    if (m < 1 || n2 < 2 || n2 % 2) throw Error("BadParams", "osp(m|2n) needs m >= 1, n >= 1");
    if (f.is_prime() && f.p() == 2 && !allow_bad_prime) throw Error("BadPrime", "2 is a bad prime for osp");
    if (!lam.osp_admissible()) throw Error("BadPartition", "partition " + lam.str() + " is not admissible for osp");

    JordanLayout L = JordanLayout::of(lam);
    size_t N = size_t(L.N);
    auto eta = L.eta();
    auto partner = osp_partners(lam, pairing);
    std::vector<int> sign(partner.size());
    Matrix G(f, N, N);
    for (size_t i = 0; i < partner.size(); ++i) {
        size_t j = partner[i];
        int lamb = L.blocks[i].lambda;
        int c = 1;
        if (j < i) {
            int s = (lamb - 1) % 2 ? -1 : 1;
            c = L.blocks[i].parity == 0 ? s : -s;
        }
        sign[i] = c;
        for (int k = 0; k < lamb; ++k) {
            int l = lamb - 1 - k;
            G(size_t(L.index(i, k)), size_t(L.index(j, l))) = Scalar(f, (k % 2 ? -c : c));
        }
    }

    // B(Xv,w) + (-1)^{|X||v|} B(v,Xw) = 0 on basis vectors, separately for each parity of X
    std::vector<Matrix> mats;
    std::vector<Label> labels;
    for (int par = 0; par < 2; ++par) {
        std::vector<size_t> pos;
        std::vector<long> where(N * N, -1);
        for (size_t r = 0; r < N; ++r)
            for (size_t c = 0; c < N; ++c)
                if ((eta[r] + eta[c]) % 2 == par) {
                    where[r * N + c] = long(pos.size());
                    pos.push_back(r * N + c);
                }
        RowSystem sys(f, pos.size());
        for (size_t a = 0; a < N; ++a)
            for (size_t b = 0; b < N; ++b) {
                Vec row = zero_vec(f, pos.size());
                bool any = false;
                for (size_t c = 0; c < N; ++c) {
                    if (!G(c, b).is_zero() && where[c * N + a] >= 0) {
                        row[size_t(where[c * N + a])] += G(c, b);
                        any = true;
                    }
                    if (!G(a, c).is_zero() && where[c * N + b] >= 0) {
                        Scalar g = (par && eta[a]) ? -G(a, c) : G(a, c);
                        row[size_t(where[c * N + b])] += g;
                        any = true;
                    }
                }
                if (any) sys.add_equation(row);
            }
        Subspace sol = sys.solutions();
        for (size_t r = 0; r < sol.dim(); ++r) {
            const Vec& v = sol.basis()[r];
            Matrix x(f, N, N);
            for (size_t u = 0; u < pos.size(); ++u) x(pos[u] / N, pos[u] % N) = v[u];
            size_t p = pos[sol.pivots()[r]];
            mats.push_back(x);
            labels.push_back({"X(" + std::to_string(p / N + 1) + "," + std::to_string(p % N + 1) + ")", par});
        }
    }
    auto real = std::make_shared<MatrixRealization>(MatrixBasis(f, N, std::move(mats)), eta);
    real->gram = G;
    real->layout = L;
    real->partner = partner;
    real->pair_sign = sign;
    AlgebraKind kind{"osp", {{"m", std::to_string(m)}, {"n", std::to_string(n2 / 2)}, {"form", lam.str()},
                             {"pairing", pairing == OspPairing::SForm ? "sform" : "zform"}}};
    return realize_algebra(f, std::move(kind), std::move(labels), real);
}

SuperAlgebra build_osp(int m, int n2, const Field& f, bool allow_bad_prime)
{
    if (m < 1 || n2 < 2 || n2 % 2) throw Error("BadParams", "osp(m|2n) needs m >= 1, n >= 1");
    return build_osp(Partition::make(std::vector<int>(size_t(m), 1), std::vector<int>(size_t(n2), 1)), f,
                     OspPairing::SForm, allow_bad_prime);
}

SuperAlgebra build_by_name(const std::string& family, int m, int n, const Scalar& alpha, const Field& f,
                           bool allow_bad_prime)
{
    if (family == "gl") return build_gl(m, n, f);
    if (family == "sl") return build_sl(m, n, f);
    if (family == "psl") return build_psl(m, n, f);
    if (family == "osp") return build_osp(m, 2 * n, f, allow_bad_prime);
    if (family == "d21") return build_d21(alpha, f, allow_bad_prime);
    if (family == "g3") return build_g3(f, allow_bad_prime);
    if (family == "f4") return build_f4(f, allow_bad_prime);
    throw Error("BadParams", "unknown algebra type " + family);
}

}

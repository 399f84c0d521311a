#include "superz/linalg.hpp"

#include <algorithm>

namespace superz {

Matrix::Matrix(const Field& f, size_t rows, size_t cols)
    : m_field(f), m_rows(rows), m_cols(cols), m_a(rows * cols, Scalar(f, 0))
{
}

Vec Matrix::row(size_t i) const
{
    return Vec(m_a.begin() + i * m_cols, m_a.begin() + (i + 1) * m_cols);
}

Vec Matrix::col(size_t j) const
{
    Vec v(m_rows);
    for (size_t i = 0; i < m_rows; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(size_t j, const Vec& v)
{
    for (size_t i = 0; i < m_rows; ++i) (*this)(i, j) = v[i];
}

Vec Matrix::apply(const Vec& x) const
{
    Vec y = zero_vec(m_field, m_rows);
    for (size_t j = 0; j < m_cols; ++j) {
        if (x[j].is_zero()) continue;
        for (size_t i = 0; i < m_rows; ++i)
            if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    }
    return y;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    Matrix c(m_field, m_rows, o.m_cols);
    for (size_t i = 0; i < m_rows; ++i)
        for (size_t k = 0; k < m_cols; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.m_cols; ++j)
                if (!o(k, j).is_zero()) c(i, j) += a * o(k, j);
        }
    return c;
}

bool Matrix::is_zero() const
{
    for (auto& x : m_a)
        if (!x.is_zero()) return false;
    return true;
}

Vec Echelon::residual(Vec v) const
{
    for (size_t r = 0; r < m_rows.size(); ++r) {
        const Scalar c = v[m_piv[r]];
        if (c.is_zero()) continue;
        const Vec& row = m_rows[r];
        for (size_t j = m_piv[r]; j < m_n; ++j)
            if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    return v;
}

bool Echelon::add(Vec v)
{
    v = residual(std::move(v));
    size_t p = 0;
    while (p < m_n && v[p].is_zero()) ++p;
    if (p == m_n) return false;
    Scalar ip = inv(v[p]);
    for (size_t j = p; j < m_n; ++j)
        if (!v[j].is_zero()) v[j] *= ip;
    for (auto& row : m_rows) {
        Scalar c = row[p];
        if (c.is_zero()) continue;
        for (size_t j = p; j < m_n; ++j)
            if (!v[j].is_zero()) row[j] -= c * v[j];
    }
    auto it = std::lower_bound(m_piv.begin(), m_piv.end(), p);
    size_t at = size_t(it - m_piv.begin());
    m_piv.insert(it, p);
    m_rows.insert(m_rows.begin() + long(at), std::move(v));
    return true;
}

Subspace Subspace::span(const Field& f, size_t n, const std::vector<Vec>& vs)
{
    Subspace s(f, n);
    for (auto& v : vs) s.add(v);
    return s;
}

Subspace Subspace::whole(const Field& f, size_t n)
{
    Subspace s(f, n);
    for (size_t i = 0; i < n; ++i) s.add(unit_vec(f, n, i));
    return s;
}

bool Subspace::contains(const Subspace& o) const
{
    for (auto& v : o.basis())
        if (!member(v)) return false;
    return true;
}

Vec Subspace::coords(const Vec& v) const
{
    if (!member(v)) throw Error("NotInSubspace", "vector is not in the subspace");
    Vec c(dim());
    for (size_t r = 0; r < dim(); ++r) c[r] = v[pivots()[r]];
    return c;
}

bool Subspace::operator==(const Subspace& o) const
{
    if (ambient() != o.ambient() || dim() != o.dim()) return false;
    if (pivots() != o.pivots()) return false;
    for (size_t r = 0; r < dim(); ++r)
        for (size_t j = 0; j < ambient(); ++j)
            if (basis()[r][j] != o.basis()[r][j]) return false;
    return true;
}

Subspace sum(const Subspace& s, const Subspace& t)
{
    if (s.ambient() != t.ambient()) throw Error("AlgebraMismatch", "subspaces in different ambient spaces");
    Subspace r = s;
    for (auto& v : t.basis()) r.add(v);
    return r;
}

Subspace intersect(const Subspace& s, const Subspace& t)
{
    if (s.ambient() != t.ambient()) throw Error("AlgebraMismatch", "subspaces in different ambient spaces");
    const Field& f = s.field();
    size_t n = s.ambient(), d = s.dim();
    Matrix m(f, n, d);
    for (size_t i = 0; i < d; ++i) m.set_col(i, t.m_ech.residual(s.basis()[i]));
    Subspace k = kernel(m);
    Subspace r(f, n);
    for (auto& a : k.basis()) {
        Vec x = zero_vec(f, n);
        for (size_t i = 0; i < d; ++i) axpy(x, a[i], s.basis()[i]);
        r.add(x);
    }
    return r;
}

static Subspace nullspace_of(const Echelon& e, const Field& f, size_t n)
{
    std::vector<char> isPiv(n, 0);
    for (auto p : e.pivots()) isPiv[p] = 1;
    Subspace k(f, n);
    for (size_t free = 0; free < n; ++free) {
        if (isPiv[free]) continue;
        Vec x = zero_vec(f, n);
        x[free] = Scalar(f, 1);
        for (size_t r = 0; r < e.rank(); ++r) x[e.pivots()[r]] = -e.rows()[r][free];
        k.add(x);
    }
    return k;
}

Subspace kernel(const Matrix& A)
{
    Echelon e(A.field(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i) {
        e.add(A.row(i));
        if (e.rank() == A.cols()) break;
    }
    return nullspace_of(e, A.field(), A.cols());
}

size_t rank(const Matrix& A)
{
    Echelon e(A.field(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i) e.add(A.row(i));
    return e.rank();
}

std::optional<Vec> solve(const Matrix& A, const Vec& b)
{
    // columns of A span; find x by reducing the augmented transpose system
    const Field& f = A.field();
    size_t n = A.cols();
    Echelon e(f, n + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        Vec r = A.row(i);
        r.push_back(b[i]);
        e.add(r);
    }
    for (size_t r = 0; r < e.rank(); ++r)
        if (e.pivots()[r] == n) return std::nullopt;
    Vec x = zero_vec(f, n);
    for (size_t r = 0; r < e.rank(); ++r) x[e.pivots()[r]] = e.rows()[r][n];
    return x;
}

Subspace RowSystem::solutions() const
{
    return nullspace_of(m_ech, m_ech.field(), m_ech.ambient());
}

}

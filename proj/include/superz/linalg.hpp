#pragma once

#include <optional>
#include <vector>

#include "superz/scalar.hpp"

namespace superz {

// dense row-major matrix
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, size_t rows, size_t cols);

    size_t rows() const { return m_rows; }
    size_t cols() const { return m_cols; }
    const Field& field() const { return m_field; }

    Scalar& operator()(size_t i, size_t j) { return m_a[i * m_cols + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return m_a[i * m_cols + j]; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    void set_col(size_t j, const Vec& v);
    Vec apply(const Vec& x) const;
    Matrix operator*(const Matrix& o) const;
    bool is_zero() const;

private:
    Field m_field = Field::rationals();
    size_t m_rows = 0, m_cols = 0;
    Vec m_a;
};

// incremental reduced row echelon form; rows kept sorted by pivot, pivots equal 1
class Echelon {
public:
    Echelon(const Field& f, size_t n) : m_field(f), m_n(n) {}

    // returns true if v enlarged the span
    bool add(Vec v);
    Vec residual(Vec v) const;
    bool contains(const Vec& v) const { return is_zero(residual(v)); }

    size_t rank() const { return m_rows.size(); }
    size_t ambient() const { return m_n; }
    const Field& field() const { return m_field; }
    const std::vector<Vec>& rows() const { return m_rows; }
    const std::vector<size_t>& pivots() const { return m_piv; }

private:
    Field m_field;
    size_t m_n;
    std::vector<Vec> m_rows;
    std::vector<size_t> m_piv;
};

class Subspace {
public:
    Subspace(const Field& f, size_t n) : m_ech(f, n) {}
    static Subspace span(const Field& f, size_t n, const std::vector<Vec>& vs);
    static Subspace whole(const Field& f, size_t n);

    size_t dim() const { return m_ech.rank(); }
    size_t ambient() const { return m_ech.ambient(); }
    const Field& field() const { return m_ech.field(); }
    const std::vector<Vec>& basis() const { return m_ech.rows(); }
    const std::vector<size_t>& pivots() const { return m_ech.pivots(); }

    bool member(const Vec& v) const { return m_ech.contains(v); }
    bool add(const Vec& v) { return m_ech.add(v); }
    bool contains(const Subspace& o) const;
    // coordinates of a member in the canonical basis
    Vec coords(const Vec& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    friend Subspace intersect(const Subspace& s, const Subspace& t);
    friend Subspace sum(const Subspace& s, const Subspace& t);

private:
    Echelon m_ech;
};

Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);

// null space of A (vectors x with A x = 0), canonical
Subspace kernel(const Matrix& A);
size_t rank(const Matrix& A);
// some x with A x = b, or nothing
std::optional<Vec> solve(const Matrix& A, const Vec& b);

// kernel of a linear system fed row by row; rows are equations over the unknowns
class RowSystem {
public:
    RowSystem(const Field& f, size_t unknowns) : m_ech(f, unknowns) {}
    void add_equation(const Vec& row) { m_ech.add(row); }
    bool saturated() const { return m_ech.rank() == m_ech.ambient(); }
    Subspace solutions() const;

private:
    Echelon m_ech;
};

}

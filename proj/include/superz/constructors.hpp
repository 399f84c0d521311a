#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superz/linalg.hpp"
#include "superz/partition.hpp"
#include "superz/superlie.hpp"

namespace superz {

// linearly independent matrices with coordinate recovery
class MatrixBasis {
public:
    MatrixBasis(const Field& f, size_t n, std::vector<Matrix> mats);

    size_t size() const { return m_mats.size(); }
    size_t n() const { return m_n; }
    const Matrix& operator[](size_t i) const { return m_mats[i]; }
    const std::vector<Matrix>& mats() const { return m_mats; }
    // throws NotInSubspace
    Vec coords(const Matrix& x) const;
    Matrix realize(const Vec& c) const;

private:
    Field m_field;
    size_t m_n;
    std::vector<Matrix> m_mats;
    Echelon m_ech;
    Matrix m_t;   // row r of the echelon form in terms of the mats
};

enum class OspPairing { SForm, ZForm };

struct MatrixRealization {
    MatrixBasis basis;
    std::vector<int> eta;   // parity of each vector of V
    bool scalar_projection = false;   // psl: X -> X - X_{NN} I
    std::optional<Matrix> gram;       // osp form
    std::optional<JordanLayout> layout;   // osp: layout the form is adapted to
    std::vector<size_t> partner;      // osp: i -> i*
    std::vector<int> pair_sign;       // osp: c_{i,i*}

    MatrixRealization(MatrixBasis b, std::vector<int> eta_) : basis(std::move(b)), eta(std::move(eta_)) {}

    size_t n() const { return eta.size(); }
    Matrix project(Matrix x) const;
    Vec coords(const Matrix& x) const { return basis.coords(project(x)); }
    Matrix realize(const Vec& c) const { return basis.realize(c); }
};

Matrix identity(const Field& f, size_t n);
Matrix matrix_add(const Matrix& a, const Matrix& b, const Scalar& c = Scalar());
// supercommutator, parity of an entry (a,b) being eta_a + eta_b
Matrix supercommutator(const Matrix& x, const Matrix& y, const std::vector<int>& eta);
Scalar supertrace(const Matrix& x, const std::vector<int>& eta);

// bad primes raise BadPrime unless allowed
SuperAlgebra build_gl(int m, int n, const Field& f);
SuperAlgebra build_sl(int m, int n, const Field& f);
SuperAlgebra build_psl(int m, int n, const Field& f);
// n2 = 2n; without a partition the form is adapted to (1^m | 1^{2n})
SuperAlgebra build_osp(int m, int n2, const Field& f, bool allow_bad_prime = false);
SuperAlgebra build_osp(const Partition& lam, const Field& f, OspPairing pairing = OspPairing::SForm,
                       bool allow_bad_prime = false);

SuperAlgebra build_d21(const Scalar& alpha, const Field& f, bool allow_bad_prime = false);
SuperAlgebra build_g3(const Field& f, bool allow_bad_prime = false);
SuperAlgebra build_f4(const Field& f, bool allow_bad_prime = false);

// family in gl, sl, psl, osp, d21, g3, f4; for osp n is half the odd dimension
SuperAlgebra build_by_name(const std::string& family, int m, int n, const Scalar& alpha, const Field& f,
                           bool allow_bad_prime = false);

}

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superz/linalg.hpp"
#include "superz/scalar.hpp"

namespace superz {

struct Label {
    std::string name;
    int parity = 0;
};

struct Term {
    uint32_t idx;
    Scalar c;
};
using Sparse = std::vector<Term>;

struct AlgebraKind {
    std::string family;   // gl, sl, psl, osp, d21, g3, f4, or anything for hand-made algebras
    std::vector<std::pair<std::string, std::string>> params;

    std::string param(const std::string& key, const std::string& dflt = "") const;
};

struct MatrixRealization;

class SuperAlgebra {
public:
    SuperAlgebra(const Field& f, AlgebraKind kind, std::vector<Label> basis);

    const Field& field() const { return m_field; }
    const AlgebraKind& kind() const { return m_kind; }
    size_t dim() const { return m_basis.size(); }
    size_t even_dim() const;
    size_t odd_dim() const { return dim() - even_dim(); }
    const std::vector<Label>& basis() const { return m_basis; }
    const Label& label(size_t i) const { return m_basis[i]; }
    int parity(size_t i) const { return m_basis[i].parity; }
    size_t index(const std::string& name) const;
    bool has(const std::string& name) const { return m_index.count(name) != 0; }

    // constants are set only for i <= j; (j,i) follows from super-anticommutativity
    void set_bracket(size_t i, size_t j, const Vec& v);
    void set_bracket(size_t i, size_t j, Sparse v);
    const Sparse& stored(size_t i, size_t j) const { return m_c[i * dim() + j]; }
    Sparse bracket_basis(size_t i, size_t j) const;

    Vec bracket(const Vec& x, const Vec& y) const;
    Matrix ad_matrix(const Vec& x) const;

    Vec zero() const { return zero_vec(m_field, dim()); }
    Vec unit(size_t i) const { return unit_vec(m_field, dim(), i); }
    Vec unit(const std::string& name) const { return unit(index(name)); }
    // -1 when x mixes parities, 0/1 otherwise (zero counts as even)
    int parity_of(const Vec& x) const;
    std::string show(const Vec& x) const;

    // integer torus weights per label, one entry per coroot (exceptional types)
    void set_weights(std::vector<std::string> coroots, std::vector<std::vector<int>> w);
    bool has_weights() const { return !m_weights.empty(); }
    const std::vector<std::string>& coroots() const { return m_coroots; }
    const std::vector<int>& weight(size_t i) const { return m_weights[i]; }

    void set_realization(std::shared_ptr<const MatrixRealization> r) { m_real = std::move(r); }
    const MatrixRealization* realization() const { return m_real.get(); }

    void add_note(std::string n) { m_notes.push_back(std::move(n)); }
    const std::vector<std::string>& notes() const { return m_notes; }

    // reduce a rational algebra into a prime field
    SuperAlgebra reduced(const Field& f) const;

    nlohmann::json to_json() const;

private:
    Field m_field;
    AlgebraKind m_kind;
    std::vector<Label> m_basis;
    std::map<std::string, size_t> m_index;
    std::vector<Sparse> m_c;
    std::vector<std::string> m_coroots;
    std::vector<std::vector<int>> m_weights;
    std::shared_ptr<const MatrixRealization> m_real;
    std::vector<std::string> m_notes;
};

Sparse to_sparse(const Vec& v);
Vec to_dense(const Sparse& s, const Field& f, size_t n);

struct JacobiViolation {
    size_t i, j, k;
};

std::vector<JacobiViolation> check_super_jacobi(const SuperAlgebra& a);
std::vector<JacobiViolation> check_super_jacobi_serial(const SuperAlgebra& a);
// super-anticommutativity and parity compatibility of the stored table
bool check_table(const SuperAlgebra& a);

Subspace span(const SuperAlgebra& a, const std::vector<Vec>& xs);

}

#pragma once

#include <map>
#include <string>
#include <vector>

#include "superz/orbits.hpp"
#include "superz/partition.hpp"
#include "superz/superlie.hpp"

namespace superz {

// kernel of ad e; throws OddElement
Subspace centralizer(const SuperAlgebra& a, const Vec& e);
// g^e(j) = g^e cap g(j), computed degree by degree
std::map<int, Subspace> graded_centralizer(const SuperAlgebra& a, const OrbitSpec& o);
Subspace center_of_centralizer(const SuperAlgebra& a, const Vec& e);
// same, reusing a centralizer already split into homogeneous pieces
Subspace center_of_centralizer(const SuperAlgebra& a, const std::map<int, Subspace>& graded);

// the map xi_i^{j,k}: v_i -> e^k v_j, commuting with e; indices 0-based
struct XiLabel {
    int i, j, k;
    std::string str() const;
};
Matrix xi_matrix(const Field& f, const JordanLayout& L, const XiLabel& x);
// e^k as a matrix (k = 0 gives I)
Matrix jordan_power(const Field& f, const JordanLayout& L, int k);

struct ClosedForm {
    std::vector<std::string> labels;
    std::vector<Vec> vectors;          // coordinates in the algebra
    std::vector<std::string> notes;    // conventions chosen along the way
};

std::vector<XiLabel> closed_form_basis_gl(const Partition& lam);
// dispatch on the family of a (gl, sl, psl, osp with an sform algebra built for lam)
ClosedForm closed_form_basis(const SuperAlgebra& a, const Partition& lam);
// Stated: the center theorems as printed. Corrected: the variant the kernel oracle agrees with
// (sl keeps I whenever p | m - n; osp keeps every nonzero odd power of e, and the first
// exceptional vector needs block 1 even and lambda_2 > lambda_{a+1} whatever a and block 2 are).
enum class CenterReading { Stated, Corrected };
// osp needs an algebra built for lam with the zform pairing
ClosedForm closed_form_center(const SuperAlgebra& a, const Partition& lam,
                              CenterReading reading = CenterReading::Stated);

}

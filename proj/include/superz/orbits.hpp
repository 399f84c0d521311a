#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superz/partition.hpp"
#include "superz/superlie.hpp"

namespace superz {

struct OrbitSpec {
    std::string label;
    Vec rep;
    std::vector<int> degree;           // tau-degree of every basis label
    std::optional<Partition> partition;
    std::vector<int> exponents;        // c_i on the coroots (exceptional types)
};

// Jordan nilpotent of type lam in the matrix realization; osp algebras must be built for lam
OrbitSpec nilpotent_from_partition(const SuperAlgebra& a, const Partition& lam);
// the block nilpotent e as a matrix on V
Matrix jordan_matrix(const Field& f, const JordanLayout& L);

std::vector<OrbitSpec> exceptional_orbit_catalog(const SuperAlgebra& a);
// catalog label for exceptional types, partition string otherwise
OrbitSpec find_orbit(const SuperAlgebra& a, const std::string& label);

bool is_nilpotent(const SuperAlgebra& a, const Vec& x);
std::map<int, Subspace> tau_grading(const SuperAlgebra& a, const OrbitSpec& o);
Subspace degree_piece(const SuperAlgebra& a, const OrbitSpec& o, int j);

}

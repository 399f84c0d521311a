#pragma once

#include <optional>
#include <vector>

#include "superz/orbits.hpp"
#include "superz/superlie.hpp"

namespace superz {

// e = sum c [basis[i], basis[j]]
struct Witness {
    std::vector<Vec> basis;
    struct Term {
        size_t i, j;
        Scalar c;
    };
    std::vector<Term> terms;

    Vec evaluate(const SuperAlgebra& a) const;
};

struct ReachabilityVerdict {
    bool reachable = false;
    bool strongly_reachable = false;
    bool panyushev = false;
    std::optional<Witness> witness;
};

// basis of s split into even and odd vectors (s must be Z2-graded)
std::vector<Vec> homogeneous_basis(const SuperAlgebra& a, const Subspace& s);
// throws NotASubalgebra
Subspace derived_subspace(const SuperAlgebra& a, const Subspace& s);
// throws SeedOutsideAmbient, NotASubalgebra
Subspace generated_subalgebra(const SuperAlgebra& a, const Subspace& seed, const Subspace& ambient);

ReachabilityVerdict classify(const SuperAlgebra& a, const OrbitSpec& o);
// same, reusing g^e split by degree
ReachabilityVerdict classify(const SuperAlgebra& a, const OrbitSpec& o, const std::map<int, Subspace>& graded);

}

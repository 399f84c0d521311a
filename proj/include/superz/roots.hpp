#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "superz/superlie.hpp"

namespace superz {

struct WeightVector {
    std::vector<mpq_class> coords;
    int parity = 0;

    bool operator==(const WeightVector& o) const { return coords == o.coords; }
    WeightVector operator-() const;
    std::string str(const std::vector<std::string>& names) const;
};

// explicit root set with its symmetric form on the ambient coordinates
struct RootSystem {
    std::string family;
    std::vector<std::string> coord_names;
    std::vector<std::vector<mpq_class>> gram;
    std::vector<WeightVector> roots;

    mpq_class form(const WeightVector& a, const WeightVector& b) const;
};

struct SimpleSystem {
    std::string name;
    std::vector<WeightVector> simples;
};

struct HighestRoot {
    WeightVector root;
    std::vector<long> coeffs;
    std::vector<WeightVector> positive;
};

// <beta, alpha>
mpq_class pairing(const WeightVector& beta, const WeightVector& alpha, const RootSystem& rs);

// coordinates of w in the simple roots; empty when w is outside their rational span
std::vector<mpq_class> simple_coords(const SimpleSystem& pi, const WeightVector& w);

// throws NotAPositiveSystem
HighestRoot highest_root(const RootSystem& rs, const SimpleSystem& pi);

struct ListedSystem {
    RootSystem roots;
    SimpleSystem pi;
};

// the simple systems enumerated for the family (classical ones depend on m, n)
std::vector<ListedSystem> listed_systems(const AlgebraKind& kind);

bool is_good_prime(const AlgebraKind& kind, uint32_t p);

}

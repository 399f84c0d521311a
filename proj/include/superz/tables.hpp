#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superz/superlie.hpp"

namespace superz {

// "6*v-1e3 - v1e-1": terms separated by " + " or " - ", optional rational "c*" prefix
Vec parse_combo(const SuperAlgebra& a, const std::string& s);

struct ExpectedRow {
    std::string label;
    int dim_ge = -1;
    int dim_even = -1, dim_odd = -1;
    int center_dim = -1;
    std::vector<std::string> center;     // center basis besides e
    std::vector<std::string> basis;      // tabulated basis of g^e (or of its odd part)
    bool basis_is_odd_part = false;
    // 'Y' or 'N'; '5' marks a Yes that turns into No at p = 5
    char reachable = '?', strongly = '?', panyushev = '?';
};

// rows of the published tables, in catalog order (d21, g3, f4)
std::vector<ExpectedRow> expected_table(const std::string& family);

struct RowCheck {
    std::string label;
    std::vector<std::string> diffs;
    bool ok() const { return diffs.empty(); }
};

// compare every catalog orbit of a with its tabulated row; parallel over orbits unless serial
std::vector<RowCheck> verify_table(const SuperAlgebra& a, bool parallel = true);


// worked commutators quoted in the reachability proofs
struct Anchor {
    std::string text;
    Vec x, y, want;
    bool holds(const SuperAlgebra& a) const;
};
std::vector<Anchor> worked_anchors(const SuperAlgebra& a);

}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superz/partition.hpp"
#include "superz/scalar.hpp"
#include "superz/superlie.hpp"

namespace superz {

// a classical algebra together with a Jordan type that fits it
struct ClassicalCase {
    std::string family;   // gl, sl, psl, osp
    Partition lam;
    int m = 0, n = 0;     // algebra parameters; for osp n is half the odd dimension
    std::string str() const;
};

enum class SlRegime { Any, PDividesAll, PNotDividesSome };

// reproducible random cases with dim V = m + n (or m + 2n) at most max_v
std::vector<ClassicalCase> random_cases(const std::string& family, const Field& f, size_t count, uint64_t seed,
                                        int max_v, SlRegime regime = SlRegime::Any);

// the algebra for a case; osp is built for the case's partition
SuperAlgebra build_case(const ClassicalCase& c, const Field& f, bool zform = false);

}

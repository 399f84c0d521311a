#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "superz/orbits.hpp"
#include "superz/superlie.hpp"

namespace superz {

inline constexpr const char* kSchema = "superz-report/1";

struct ReportOptions {
    bool timing = false;   // wall-clock fields break byte-identical output, so they are opt-in
};

std::string field_str(const Field& f);
nlohmann::json kind_json(const AlgebraKind& k);
// [[label, coefficient], ...] over the nonzero coordinates, in basis order
nlohmann::json vector_json(const SuperAlgebra& a, const Vec& v);
// primes below the bound for the exceptional types and similar caveats
std::vector<std::string> warnings_for(const SuperAlgebra& a);

// g^e(j) = 0 for j < 0, dim g^e = dim g(0) + dim g(1), dim g^e(j) = dim g(j) - dim g(j+2) for j >= 0
struct DimensionIdentities {
    bool nothing_negative = true;
    bool total = true;
    bool per_degree = true;
    bool all() const { return nothing_negative && total && per_degree; }
};
DimensionIdentities check_dimension_identities(const SuperAlgebra& a, const OrbitSpec& o,
                                               const std::map<int, Subspace>& graded);
// z(g^e) cap g(2) = <e>
bool check_degree_two_center(const SuperAlgebra& a, const OrbitSpec& o, const Subspace& center);

nlohmann::json orbit_report(const SuperAlgebra& a, const OrbitSpec& o, const ReportOptions& opt = {});
// scalar columns of a report, for CSV
std::vector<std::string> csv_header();
std::vector<std::string> csv_row(const nlohmann::json& report);

}

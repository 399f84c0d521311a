#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "superz/constructors.hpp"
#include "superz/orbits.hpp"
#include "superz/report.hpp"

using namespace superz;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run cli(const std::string& args)
{
    std::string out = "superz_cli_out.txt", err = "superz_cli_err.txt";
    std::string cmd = std::string(SUPERZ_CLI) + " " + args + " >" + out + " 2>" + err;
    int rc = std::system(cmd.c_str());
    Run r{WEXITSTATUS(rc), slurp(out), slurp(err)};
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

}

TEST_CASE("orbit report fields and identities")
{
    Field f = Field::prime(7);
    auto a = build_f4(f);
    json r = orbit_report(a, find_orbit(a, "e(5,1^2)"));
    CHECK(r["schema"] == kSchema);
    CHECK(r["prime"] == "7");
    CHECK(r["dim_ge_even"] == 8);
    CHECK(r["dim_ge_odd"] == 4);
    CHECK(r["center_dim"] == 2);
    CHECK(r["dim_ge"] == 12);
    int sum = 0;
    for (auto& [k, v] : r["grading"].items()) sum += v.get<int>();
    CHECK(sum == 12);
    for (auto& [k, v] : r["checks"].items()) CHECK_MESSAGE(v.get<bool>(), k);
    CHECK_FALSE(r.contains("timing"));
    CHECK(orbit_report(a, find_orbit(a, "e(5,1^2)")).dump() == r.dump());
}

TEST_CASE("csv flattens scalars only")
{
    Field f = Field::prime(5);
    auto a = build_gl(2, 1, f);
    json r = orbit_report(a, nilpotent_from_partition(a, Partition::parse("2|1")));
    auto h = csv_header();
    auto row = csv_row(r);
    CHECK(h.size() == row.size());
    for (auto& c : row) CHECK(c.find('[') == std::string::npos);
}

TEST_CASE("command line")
{
    auto r = cli("build --type d21 --alpha 2 --prime 7");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["algebra"]["dim"] == 17);

    r = cli("build --type osp --m 3 --n 1 --prime 2");
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["code"] == "BadPrime");

    r = cli("build --type psl --m 3 --n 3 --prime 3");
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["code"] == "PslBadPrime");

    r = cli("build --type gl --m 2 --n 1 --prime 4");
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["code"] == "NonPrimeModulus");

    r = cli("orbit --type sl --m 7 --n 3 --prime 7 --partition 5,2\\|3");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["dim_ge"] == 23);

    r = cli("orbit --type g3 --prime 5 --orbit E+x1");
    CHECK(r.code == 0);
    auto again = cli("orbit --type g3 --prime 5 --orbit E+x1");
    CHECK(again.out == r.out);

    r = cli("orbit --type g3 --prime 7 --orbit nope");
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["code"] == "UnknownOrbit");

    r = cli("orbit --bogus");
    CHECK(r.code == 2);

    CHECK(cli("verify-tables --family d21 --alpha 2,3 --primes 5,7,11").code == 0);
    CHECK(cli("verify-tables --family f4 --primes 5,7").code == 0);
    CHECK(cli("verify-tables --family g3 --primes 7").code == 0);
    CHECK(cli("verify-tables --family g3 --primes 5").code == 1);
}

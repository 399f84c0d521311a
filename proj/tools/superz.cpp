#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superz/centralizer.hpp"
#include "superz/constructors.hpp"
#include "superz/orbits.hpp"
#include "superz/report.hpp"
#include "superz/roots.hpp"
#include "superz/sampling.hpp"
#include "superz/tables.hpp"

using namespace superz;
using nlohmann::json;

namespace {

struct Opts {
    std::string type, alpha = "2", partition, orbit, json_path, csv_path;
    int m = 0, n = 0;
    int64_t prime = 0;
    bool allow_bad_prime = false, timing = false, serial = false;
    uint64_t seed = 1;
    std::vector<std::string> families;
    std::vector<int64_t> primes;
    std::vector<std::string> alphas;
    size_t count = 50;
    int max_v = 8;
};

Field field_of(int64_t p)
{
    return p == 0 ? Field::rationals() : Field::prime(p);
}

SuperAlgebra algebra_of(const Opts& o, const Field& f)
{
    if (o.type.empty()) throw Error("BadParams", "--type is required");
    if (o.type == "osp" && !o.partition.empty())
        return build_osp(Partition::parse(o.partition), f, OspPairing::SForm, o.allow_bad_prime);
    return build_by_name(o.type, o.m, o.n, Scalar::parse(f, o.alpha), f, o.allow_bad_prime);
}

void emit(const json& j, const std::string& path)
{
    std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("BadParams", "cannot write " + path);
    out << text;
}

void emit_csv(const std::vector<json>& reports, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw Error("BadParams", "cannot write " + path);
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            std::string c = cells[i];
            bool quote = c.find_first_of(",\"") != std::string::npos;
            if (quote) {
                std::string q;
                for (char ch : c) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                c = "\"" + q + "\"";
            }
            out << (i ? "," : "") << c;
        }
        out << "\n";
    };
    line(csv_header());
    for (auto& r : reports) line(csv_row(r));
}

int cmd_build(const Opts& o)
{
    Field f = field_of(o.prime);
    SuperAlgebra a = algebra_of(o, f);
    json j{{"schema", kSchema}, {"algebra", a.to_json()}};
    j["checks"] = {{"super_jacobi_violations", check_super_jacobi(a).size()}, {"table_consistent", check_table(a)}};
    j["warnings"] = warnings_for(a);
    emit(j, o.json_path);
    return 0;
}

int cmd_orbit(const Opts& o)
{
    Field f = field_of(o.prime);
    std::string label = !o.partition.empty() ? o.partition : o.orbit;
    if (label.empty()) throw Error("BadParams", "orbit needs --orbit or --partition");
    SuperAlgebra a = algebra_of(o, f);
    OrbitSpec spec = find_orbit(a, label);
    json r = orbit_report(a, spec, ReportOptions{o.timing});
    emit(r, o.json_path);
    if (!o.csv_path.empty()) emit_csv({r}, o.csv_path);
    return 0;
}

int cmd_verify(const Opts& o)
{
    std::vector<std::string> fams = o.families;
    if (fams.empty() || (fams.size() == 1 && fams[0] == "all")) fams = {"d21", "g3", "f4"};
    std::vector<int64_t> primes = o.primes.empty() ? std::vector<int64_t>{5, 7, 11, 13} : o.primes;
    std::vector<std::string> alphas = o.alphas.empty() ? std::vector<std::string>{"2", "3"} : o.alphas;
    json summary{{"schema", kSchema}, {"results", json::array()}};
    bool all_ok = true;
    for (auto& fam : fams) {
        std::vector<std::string> avals = fam == "d21" ? alphas : std::vector<std::string>{""};
        for (auto& al : avals)
            for (int64_t p : primes) {
                Field f = field_of(p);
                SuperAlgebra a = fam == "d21" ? build_d21(Scalar::parse(f, al), f, o.allow_bad_prime)
                                              : build_by_name(fam, 0, 0, Scalar(f, 1), f, o.allow_bad_prime);
                auto checks = verify_table(a, !o.serial);
                json rows = json::array();
                for (auto& c : checks) {
                    all_ok = all_ok && c.ok();
                    std::cout << (c.ok() ? "PASS " : "FAIL ") << fam << (al.empty() ? "" : " alpha=" + al) << " p="
                              << field_str(f) << " " << c.label;
                    for (auto& d : c.diffs) std::cout << " | " << d;
                    std::cout << "\n";
                    rows.push_back({{"label", c.label}, {"ok", c.ok()}, {"diffs", c.diffs}});
                }
                json params = json::object();
                if (!al.empty()) params["alpha"] = al;
                summary["results"].push_back({{"family", fam}, {"params", params}, {"prime", field_str(f)}, {"rows", rows}});
            }
    }
    summary["ok"] = all_ok;
    if (!o.json_path.empty()) emit(summary, o.json_path);
    return all_ok ? 0 : 1;
}

int cmd_roots(const Opts& o)
{
    if (o.type.empty()) throw Error("BadParams", "--type is required");
    AlgebraKind kind{o.type, {}};
    if (o.type == "d21") kind.params = {{"alpha", o.alpha}};
    else if (o.type != "g3" && o.type != "f4") kind.params = {{"m", std::to_string(o.m)}, {"n", std::to_string(o.n)}};
    json systems = json::array();
    for (auto& ls : listed_systems(kind)) {
        auto h = highest_root(ls.roots, ls.pi);
        json simples = json::array();
        for (auto& s : ls.pi.simples) simples.push_back(s.str(ls.roots.coord_names));
        systems.push_back({{"name", ls.pi.name},
                           {"simple_roots", simples},
                           {"highest_root", h.root.str(ls.roots.coord_names)},
                           {"coefficients", h.coeffs},
                           {"positive_roots", h.positive.size()}});
    }
    json j{{"schema", kSchema}, {"kind", kind_json(kind)}, {"systems", systems}};
    json good = json::array();
    for (uint32_t p = 2; p < 50; ++p)
        if (is_prime_number(p) && is_good_prime(kind, p)) good.push_back(std::to_string(p));
    j["good_primes_below_50"] = good;
    if (o.prime) j["prime_is_good"] = is_good_prime(kind, uint32_t(o.prime));
    emit(j, o.json_path);
    return 0;
}

int cmd_sweep(const Opts& o)
{
    Field f = field_of(o.prime);
    auto cases = random_cases(o.type, f, o.count, o.seed, o.max_v);
    json rows = json::array();
    size_t basis_ok = 0, stated_ok = 0, corrected_ok = 0;
    for (auto& c : cases) {
        SuperAlgebra a = build_case(c, f);
        json r = orbit_report(a, nilpotent_from_partition(a, c.lam));
        const json& cf = r["closed_form"];
        auto yes = [](const json& v) { return v.is_boolean() && v.get<bool>(); };
        basis_ok += yes(cf["basis_matches"]);
        stated_ok += yes(cf["center_matches_stated"]);
        corrected_ok += yes(cf["center_matches_corrected"]);
        rows.push_back({{"case", c.str()}, {"dim_ge", r["dim_ge"]}, {"center_dim", r["center_dim"]}, {"closed_form", cf}});
    }
    json j{{"schema", kSchema},
           {"family", o.type},
           {"prime", field_str(f)},
           {"seed", std::to_string(o.seed)},
           {"cases", rows},
           {"basis_matches", basis_ok},
           {"center_matches_stated", stated_ok},
           {"center_matches_corrected", corrected_ok},
           {"total", cases.size()}};
    emit(j, o.json_path);
    return basis_ok == cases.size() && corrected_ok == cases.size() ? 0 : 1;
}

void fail(const std::string& code, const std::string& msg)
{
    json e{{"schema", kSchema}, {"error", {{"code", code}, {"message", msg}}}};
    std::cerr << e.dump() << "\n";
}

}

int main(int argc, char** argv)
{
    CLI::App app{"exact centralizers and reachability in basic classical Lie superalgebras"};
    app.require_subcommand(1);
    Opts o;

    auto algebra_flags = [&](CLI::App* c) {
        c->add_option("--type", o.type, "gl, sl, psl, osp, d21, g3, f4");
        c->add_option("--m", o.m, "even dimension");
        c->add_option("--n", o.n, "odd dimension (for osp: half of it)");
        c->add_option("--alpha", o.alpha, "D(2,1;alpha) parameter as an integer residue");
        c->add_option("--prime", o.prime, "characteristic; 0 means the rationals");
        c->add_flag("--allow-bad-prime", o.allow_bad_prime);
        c->add_option("--json", o.json_path, "write JSON here instead of stdout");
    };

    auto* build = app.add_subcommand("build", "construct an algebra and print its structure constants");
    algebra_flags(build);
    build->add_option("--partition", o.partition, "osp: adapt the form to this Jordan type");

    auto* orbit = app.add_subcommand("orbit", "report centralizer, center and reachability of one orbit");
    algebra_flags(orbit);
    orbit->add_option("--partition", o.partition, "Jordan type \"p1,p2|q1,q2\" for classical families");
    orbit->add_option("--orbit", o.orbit, "catalog label for exceptional families");
    orbit->add_option("--csv", o.csv_path);
    orbit->add_flag("--timing", o.timing, "add wall-clock timings");

    auto* verify = app.add_subcommand("verify-tables", "compare the exceptional tables with the computation");
    verify->add_option("--family", o.families, "d21, g3, f4 or all")->delimiter(',');
    verify->add_option("--primes", o.primes)->delimiter(',');
    verify->add_option("--alpha", o.alphas)->delimiter(',');
    verify->add_option("--json", o.json_path);
    verify->add_flag("--allow-bad-prime", o.allow_bad_prime);
    verify->add_flag("--serial", o.serial, "one orbit at a time");

    auto* roots = app.add_subcommand("roots", "listed simple systems, highest roots and good primes");
    algebra_flags(roots);

    auto* sweep = app.add_subcommand("sweep", "random classical partitions against the closed forms");
    algebra_flags(sweep);
    sweep->add_option("--seed", o.seed);
    sweep->add_option("--count", o.count);
    sweep->add_option("--max-v", o.max_v, "bound on the dimension of V");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("BadArguments", e.what());
        return 2;
    }

    try {
        if (*build) return cmd_build(o);
        if (*orbit) return cmd_orbit(o);
        if (*verify) return cmd_verify(o);
        if (*roots) return cmd_roots(o);
        if (*sweep) return cmd_sweep(o);
    } catch (const Error& e) {
        fail(e.code, e.what());
        return 2;
    } catch (const std::exception& e) {
        fail("BadArguments", e.what());
        return 2;
    }
    return 2;
}

#include "superz/sampling.hpp"

#include <random>

#include "superz/constructors.hpp"

namespace superz {

std::string ClassicalCase::str() const
{
    return family + "(" + std::to_string(m) + "|" + std::to_string(family == "osp" ? 2 * n : n) + ") " + lam.str();
}

namespace {

// parts of k, each a multiple of step
std::vector<int> random_parts(std::mt19937_64& rng, int k, int step = 1)
{
    std::vector<int> out;
    while (k > 0) {
        std::uniform_int_distribution<int> d(1, k / step);
        int x = d(rng) * step;
        out.push_back(x);
        k -= x;
    }
    return out;
}

// parts of k where parts of the given parity class come in equal pairs
std::vector<int> paired_parts(std::mt19937_64& rng, int k, int paired_residue)
{
    std::vector<int> out;
    while (k > 0) {
        std::uniform_int_distribution<int> d(1, k);
        int x = d(rng);
        if (x % 2 == paired_residue) {
            if (2 * x > k) continue;
            out.push_back(x);
            k -= x;
        }
        out.push_back(x);
        k -= x;
    }
    return out;
}

}

std::vector<ClassicalCase> random_cases(const std::string& family, const Field& f, size_t count, uint64_t seed,
                                        int max_v, SlRegime regime)
{
    std::mt19937_64 rng(seed);
    std::vector<ClassicalCase> out;
    long p = f.is_prime() ? long(f.p()) : 0;
    for (size_t guard = 0; out.size() < count; ++guard) {
        if (guard > 100000) throw Error("BadParams", "cannot sample " + family + " cases within dim V <= " + std::to_string(max_v));
        ClassicalCase c;
        c.family = family;
        if (family == "osp") {
            std::uniform_int_distribution<int> dm(1, max_v - 2);
            c.m = dm(rng);
            if (max_v - c.m < 2) continue;
            std::uniform_int_distribution<int> dn(1, (max_v - c.m) / 2);
            c.n = dn(rng);
            c.lam = Partition::make(paired_parts(rng, c.m, 0), paired_parts(rng, 2 * c.n, 1));
            out.push_back(c);
            continue;
        }
        std::uniform_int_distribution<int> dv(1, max_v - 1);
        c.m = dv(rng);
        if (c.m >= max_v) continue;
        std::uniform_int_distribution<int> dw(1, max_v - c.m);
        c.n = dw(rng);
        if (family == "psl") c.n = c.m;
        if (family == "psl" && (c.m < 2 || 2 * c.m > max_v || (p && c.m % p == 0))) continue;
        if (family == "sl" && c.m == c.n) continue;
        int step = 1;
        if (family == "sl" && regime == SlRegime::PDividesAll) {
            if (!p || c.m % p || c.n % p) continue;
            step = int(p);
        }
        c.lam = Partition::make(random_parts(rng, c.m, step), random_parts(rng, c.n, step));
        if (family == "sl" && regime == SlRegime::PNotDividesSome) {
            bool all = p != 0;
            for (auto& b : c.lam.blocks) all = all && b.lambda % p == 0;
            if (all) continue;
        }
        out.push_back(c);
    }
    return out;
}

SuperAlgebra build_case(const ClassicalCase& c, const Field& f, bool zform)
{
    if (c.family == "gl") return build_gl(c.m, c.n, f);
    if (c.family == "sl") return build_sl(c.m, c.n, f);
    if (c.family == "psl") return build_psl(c.m, c.n, f);
    if (c.family == "osp") return build_osp(c.lam, f, zform ? OspPairing::ZForm : OspPairing::SForm);
    throw Error("BadParams", "unknown classical family " + c.family);
}

}

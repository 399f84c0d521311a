// parallel kernels against their serial references
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "superz/constructors.hpp"
#include "superz/tables.hpp"

using namespace superz;

namespace {

double best_ms(const std::function<void()>& f, int reps = 3)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* what, double ser, double par)
{
    std::printf("%-34s serial %9.2f ms  parallel %9.2f ms  x%.2f\n", what, ser, par, ser / par);
}

}

int main()
{
    std::printf("threads: %d\n", omp_get_max_threads());
    Field f = Field::prime(7);
    std::vector<std::pair<const char*, SuperAlgebra>> algs = {
        {"jacobi gl(6|4)", build_gl(6, 4, f)}, {"jacobi osp(9|6)", build_osp(9, 6, f)}, {"jacobi f4", build_f4(f)}};
    for (auto& [name, a] : algs) {
        size_t ns = 0, np = 0;
        double s = best_ms([&] { ns = check_super_jacobi_serial(a).size(); });
        double p = best_ms([&] { np = check_super_jacobi(a).size(); });
        if (ns != np) std::printf("MISMATCH %s\n", name);
        row(name, s, p);
    }
    for (auto& [name, a] : std::vector<std::pair<const char*, SuperAlgebra>>{{"verify-tables g3", build_g3(f)},
                                                                           {"verify-tables f4", build_f4(f)}}) {
        double s = best_ms([&] { verify_table(a, false); });
        double p = best_ms([&] { verify_table(a, true); });
        row(name, s, p);
    }
}

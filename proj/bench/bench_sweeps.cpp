// Times the Monte Carlo kernels serial vs OpenMP; the two paths produce
// identical reports (checked by test_sweeps), so this only compares speed.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "slr/sweeps.hpp"

using namespace slr;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <class F>
void bench(const char* name, F&& f) {
    auto t0 = clock_type::now();
    f(false);
    double serial = seconds_since(t0);
    t0 = clock_type::now();
    f(true);
    double parallel = seconds_since(t0);
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", name, serial,
                parallel, serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    long scale = argc > 1 ? std::atol(argv[1]) : 20000;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths are serial\n");
#endif
    bench("sign relation (hyp 1,2)", [&](bool par) {
        sign_relation_sweep(Family::hyperbolic, 1, 2, scale, 11, par);
    });
    bench("sampling census (hyp 0,3)", [&](bool par) {
        verify_by_sampling(Family::hyperbolic, 0, 3, scale, 12, par);
    });
    bench("sampling census (par 0,3)", [&](bool par) {
        verify_by_sampling(Family::parabolic, 0, 3, scale, 13, par);
    });
    bench("oracle (ell 0,3)", [&](bool par) {
        oracle_sweep(Family::elliptic, 0, 3, scale / 40, 14, par);
    });
    return 0;
}

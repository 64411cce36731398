// Compares the serial reference scans against the OpenMP-partitioned kernels
// and checks that both produce identical results.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "knotgauss/enumerate.hpp"

using namespace kg;

namespace {


template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_c = argc > 1 ? std::atoi(argv[1]) : 9;
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: unavailable, both paths run serially\n");
#endif

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "parallel", "match");
    for (int c = 7; c <= max_c; ++c) {
        std::vector<Shadow> a, b;
        double ts = timed([&] { a = enumerate_shadows_serial(c); });
        double tp = timed([&] { b = enumerate_shadows_parallel(c); });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
            same = a[i].matching == b[i].matching;
        std::printf("shadow scan c=%-14d %9.3fs %9.3fs %8s\n", c, ts, tp,
                    same ? "yes" : "NO");
        if (!same) return 1;
    }

    // bracket state sum on a large positive braid closure
    auto big = torus_braid_diagram(3, 8);  // 16 crossings
    LaurentPoly v1, v2p;
    double ts = timed([&] { v1 = jones(big); });
    double tp = ts;
#ifdef _OPENMP
    tp = timed([&] { v2p = jones(big); });
#else
    v2p = v1;
#endif
    std::printf("bracket sum c=%-13d %9.3fs %9.3fs %8s\n", big.crossings(), ts, tp,
                v1 == v2p ? "yes" : "NO");
    return v1 == v2p ? 0 : 1;
}

// bench_kernels.cpp — serial vs OpenMP replica-sweep benchmark.
// The parallel path must produce bit-identical samples (per-replica Philox
// streams), so the checksum comparison doubles as a determinism check.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rwre/environment.hpp"
#include "rwre/quenched.hpp"

using namespace rwre;

namespace {

double sweep(int64_t t, int replicas, uint64_t seed, bool parallel,
             std::vector<double>& out) {
    const ModelParams p{1.0, 1.0};
    out.assign(static_cast<size_t>(replicas), 0.0);
    const auto start = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < replicas; ++i) {
        const Environment env(p, seed, static_cast<uint32_t>(i));
        out[static_cast<size_t>(i)] = backward_kernel(env, 0, t, 1).at(1);
    }
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    int64_t t = 400;
    int replicas = 64;
    if (argc > 1) t = std::atoll(argv[1]);
    if (argc > 2) replicas = std::atoi(argv[2]);

    std::vector<double> serial_out, parallel_out;
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    const double ts = sweep(t, replicas, 7, false, serial_out);
    const double tp = sweep(t, replicas, 7, true, parallel_out);

    bool identical = serial_out == parallel_out;
    std::printf("backward_kernel sweep: t=%lld replicas=%d threads=%d\n",
                static_cast<long long>(t), replicas, threads);
    std::printf("  serial:   %.3f s  (%.1f sweeps/s)\n", ts, replicas / ts);
    std::printf("  parallel: %.3f s  (%.1f sweeps/s, speedup %.2fx)\n", tp,
                replicas / tp, ts / tp);
    std::printf("  bit-identical results: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}

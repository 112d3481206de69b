// Benchmark comparing the serial reference kernels against the OpenMP ones.
// Run manually: build/bench/bench_kernels [ring_size] [chain_size]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ualg/fixtures.hpp"
#include "ualg/kernels.hpp"

using namespace ualg;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& body) {
    auto start = Clock::now();
    body();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-32s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    const int ring_size = argc > 1 ? std::atoi(argv[1]) : 64;
    const int chain_size = argc > 2 ? std::atoi(argv[2]) : 5;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial code\n");
#endif
    std::printf("%-32s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        FiniteAlgebra ring = fixtures::zn_ring(ring_size);
        std::vector<Congruence> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = principal_congruence_grid_serial(ring); });
        double p = time_ms([&] { parallel_out = principal_congruence_grid_parallel(ring); });
        if (serial_out != parallel_out) {
            std::printf("principal grid results differ!\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "principal grid, z%d ring", ring_size);
        row(label, s, p);
    }

    {
        FiniteAlgebra chain = fixtures::chain_lattice(chain_size);
        ConLattice lat = con_lattice(chain, Exec::Serial);
        std::vector<int> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = commutator_grid_serial(chain, lat); });
        double p = time_ms([&] { parallel_out = commutator_grid_parallel(chain, lat); });
        if (serial_out != parallel_out) {
            std::printf("commutator grid results differ!\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "commutator grid, %d-chain (%d congruences)",
                      chain_size, lat.size());
        row(label, s, p);
    }

    {
        FiniteAlgebra s3 = fixtures::s3_group();
        ConLattice lat = con_lattice(s3, Exec::Serial);
        std::vector<int> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = commutator_grid_serial(s3, lat); });
        double p = time_ms([&] { parallel_out = commutator_grid_parallel(s3, lat); });
        if (serial_out != parallel_out) {
            std::printf("commutator grid results differ!\n");
            return 1;
        }
        row("commutator grid, s3 group", s, p);
    }
    return 0;
}

// Compares the serial reference sweep against the OpenMP-parallel one and
// checks the results are bitwise identical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "oscbath/thermo_integrals.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace oscbath;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = (argc > 1) ? std::atoi(argv[1]) : 48;
    std::vector<double> thetas;
    for (int i = 0; i < n; ++i)
        thetas.push_back(1e-3 * std::pow(2000.0, double(i) / double(n - 1)));

    const BathSpec bath = OhmicBath{0.1};
    const FieldSpec field{0.3};
    const QuadratureSpec quad{};

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    std::printf("sweep points: %d\n", n);

    auto t0 = clock_type::now();
    const auto serial = sweep_serial(bath, field, thetas, quad);
    auto t1 = clock_type::now();
    const auto parallel = sweep(bath, field, thetas, quad);
    auto t2 = clock_type::now();

    const double ts = seconds(t0, t1);
    const double tp = seconds(t1, t2);
    std::printf("serial:   %.3f s\n", ts);
    std::printf("parallel: %.3f s  (speedup %.2fx)\n", tp, ts / tp);

    for (std::size_t i = 0; i < serial.size(); ++i) {
        if (serial[i].second.free_energy_total != parallel[i].second.free_energy_total ||
            serial[i].second.entropy != parallel[i].second.entropy) {
            std::printf("MISMATCH at theta = %g\n", serial[i].first);
            return 1;
        }
    }
    std::printf("serial and parallel results are bitwise identical\n");
    return 0;
}

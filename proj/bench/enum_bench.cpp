// Compares the serial reference enumerator against the OpenMP kernel on a
// few desk-scale instances and checks that the merged reports are identical.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
static int omp_get_max_threads() { return 1; }
#endif

#include "fwps/enumerate.hpp"
#include "fwps/report_io.hpp"

using namespace fwps;

namespace {

double run_ms(const std::function<EnumerationReport()>& f, EnumerationReport& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<long, int>> cases = {{1, 6}, {2, 5}, {3, 5}, {1, 7}};
    if (argc > 2) cases = {{std::atol(argv[1]), std::atoi(argv[2])}};

    EnumerationOptions opts;
    opts.budget = 2'000'000'000ULL;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%6s %3s %10s %12s %12s %12s %9s %10s\n", "iota", "n", "count", "nodes",
                "serial_ms", "parallel_ms", "speedup", "identical");
    for (auto [iota, n] : cases) {
        EnumerationReport serial, parallel;
        double ts = run_ms([&] { return enumerate_ufp_serial(iota, n, opts); }, serial);
        double tp = run_ms([&] { return enumerate_ufp_parallel(iota, n, opts); }, parallel);
        bool same = report_to_json(serial).dump() == report_to_json(parallel).dump();
        std::printf("%6ld %3d %10zu %12llu %12.1f %12.1f %8.2fx %10s\n", iota, n,
                    serial.count(), static_cast<unsigned long long>(serial.nodes), ts, tp,
                    ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }
    return 0;
}

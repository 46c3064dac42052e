// Timing harness for the parallel kernels against their serial reference.
// Each kernel runs in both modes; the outputs must agree bitwise (the
// parallelism is over independent cells, so the per-cell arithmetic is
// identical), and the wall times plus speedup are printed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>

#include "kicked_top/classical.hpp"
#include "kicked_top/observables.hpp"
#include "kicked_top/parallel.hpp"
#include "kicked_top/recurrence.hpp"
#include "kicked_top/spin.hpp"

using namespace kt;

namespace {

template <typename F>
double time_ms(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", name.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "outputs identical" : "OUTPUTS DIFFER");
}

bool bench_husimi() {
    const auto spin = SpinParams::from_j(50.0);
    const StateVector psi = coherent_state(spin, CoherentParams{2.25, 2.0});
    HusimiField serial, parallel;
    const double ts = time_ms([&] { serial = husimi(spin, psi, 140, 280, Exec::serial); });
    const double tp = time_ms([&] { parallel = husimi(spin, psi, 140, 280, Exec::parallel); });
    const bool same = (serial.values - parallel.values).cwiseAbs().maxCoeff() == 0.0;
    report("husimi j=50 140x280", ts, tp, same);
    return same;
}

bool bench_stability() {
    const auto spin = SpinParams::from_j(15.5);
    EntropyLandscape serial, parallel;
    const double ts = time_ms(
        [&] { serial = stability_landscape(spin, KappaClass::pj, 1.0, 5, 70, 140, Exec::serial); });
    const double tp = time_ms(
        [&] { parallel = stability_landscape(spin, KappaClass::pj, 1.0, 5, 70, 140, Exec::parallel); });
    const bool same = (serial.values - parallel.values).cwiseAbs().maxCoeff() == 0.0;
    report("stability j=15.5 70x140", ts, tp, same);
    return same;
}

bool bench_table() {
    std::vector<SpinParams> spins;
    for (int two_j = 1; two_j <= 20; ++two_j) spins.push_back(SpinParams::from_two_j(two_j));
    std::vector<TableRow> serial, parallel;
    const double ts =
        time_ms([&] { serial = reproduce_table(spins, 500, 1e-10, default_p, Exec::serial); });
    const double tp =
        time_ms([&] { parallel = reproduce_table(spins, 500, 1e-10, default_p, Exec::parallel); });
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].period == parallel[i].period && serial[i].phase == parallel[i].phase;
    report("period table j=0.5..10", ts, tp, same);
    return same;
}

bool bench_classical() {
    const auto initials = classical_grid(40, 80);
    std::vector<std::vector<SphereAngles>> serial, parallel;
    const double ts = time_ms([&] { serial = stroboscopic_map(initials, 6.0, 2000, Exec::serial); });
    const double tp =
        time_ms([&] { parallel = stroboscopic_map(initials, 6.0, 2000, Exec::parallel); });
    bool same = serial.size() == parallel.size();
    for (std::size_t t = 0; same && t < serial.size(); ++t)
        for (std::size_t k = 0; same && k < serial[t].size(); ++k)
            same = serial[t][k].theta == parallel[t][k].theta &&
                   serial[t][k].phi == parallel[t][k].phi;
    report("classical 40x80 grid, 2000 kicks", ts, tp, same);
    return same;
}

} // namespace

int main() {
    std::printf("threads available: %d\n", max_threads());
    bool ok = true;
    ok &= bench_husimi();
    ok &= bench_stability();
    ok &= bench_table();
    ok &= bench_classical();
    return ok ? 0 : 1;
}

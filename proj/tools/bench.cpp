// Timing harness: the two Monte Carlo kernels, thread pool against the
// serial reference.  Estimates must agree bit for bit; only the clock moves.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "radiolim/interference.hpp"
#include "radiolim/mac_sim.hpp"
#include "radiolim/signals.hpp"

using namespace radiolim;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::printf("worker threads: %d\n\n", threads);

    {
        InterferenceScenario sc;
        sc.ensemble = walsh_ensemble(16, 8);
        sc.layout.cells = {CellSite{2.5, 8}, CellSite{4.0, 8}};
        sc.cell_ensembles = {walsh_ensemble(16, 8), walsh_ensemble(16, 8)};
        sc.thermal_power = 1e-9;
        ErrorDistribution d;
        d.amplitude_sd = 0.05;
        d.delay_sd_chips = 0.05;
        d.freq_sd_rad_per_chip = 0.05;
        d.phase_sd_rad = 0.1;
        McRun mc;
        mc.trials = 3000;

        mc.parallel = false;
        auto t0 = std::chrono::steady_clock::now();
        SinrEstimate serial = estimate_sinr(sc, d, mc);
        double ts = seconds_since(t0);

        mc.parallel = true;
        t0 = std::chrono::steady_clock::now();
        SinrEstimate parallel = estimate_sinr(sc, d, mc);
        double tp = seconds_since(t0);

        bool same = serial.sinr == parallel.sinr &&
                    serial.intra.mean == parallel.intra.mean &&
                    serial.inter.mean == parallel.inter.mean;
        std::printf("interference kernel  (walsh 16x8, 3000 trials)\n");
        std::printf("  serial   %8.3f s\n", ts);
        std::printf("  parallel %8.3f s   speedup %.2fx   bit-identical: %s\n\n", tp,
                    ts / tp, same ? "yes" : "NO");
    }

    {
        SimConfig base;
        base.stations = 16;
        base.packet_law.mean_slots = 2.0;
        base.reservation_overhead = 8;
        base.slot_size = 100;
        base.duration = 50000;
        std::vector<double> loads{0.25, 0.35, 0.45, 0.5, 0.55, 0.6};

        auto t0 = std::chrono::steady_clock::now();
        ThroughputCurve serial = sweep_load(base, loads, 8, false);
        double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        ThroughputCurve parallel = sweep_load(base, loads, 8, true);
        double tp = seconds_since(t0);

        bool same = serial.measured_capacity == parallel.measured_capacity;
        for (size_t i = 0; i < loads.size(); ++i)
            same = same && serial.points[i].throughput == parallel.points[i].throughput;
        std::printf("mac sweep            (6 loads x 8 seeds, 50k slots)\n");
        std::printf("  serial   %8.3f s\n", ts);
        std::printf("  parallel %8.3f s   speedup %.2fx   bit-identical: %s\n", tp, ts / tp,
                    same ? "yes" : "NO");
    }
    return 0;
}

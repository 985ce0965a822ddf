#pragma once
// Slotted reservation-TDMA simulator: Poisson arrivals queue at stations,
// grants are scheduled through a central FIFO, contention happens only in
// request slots (binary exponential backoff over 4 minislots), and stations
// piggyback further reservations while they still hold a grant.  Produces
// measured throughput curves whose peak is compared against the analytic
// capacity ceilings.

#include <cstdint>
#include <vector>

namespace radiolim {

enum class PacketLawKind { Geometric, Deterministic };

struct PacketLaw {
    PacketLawKind kind = PacketLawKind::Geometric;
    double mean_slots = 2.0; // geometric only, >= 1
    int slots = 1;           // deterministic only, >= 1
};

double law_mean_slots(const PacketLaw& law);
int law_min_slots(const PacketLaw& law);

struct SimConfig {
    int stations = 16;
    double offered_load = 0.25; // aggregate packets per slot
    PacketLaw packet_law;
    int reservation_overhead = 8; // bits per packet, embedded in the grant
    int slot_size = 100;          // bits per slot
    double ser = 0.0;             // per payload bit, independent
    long duration = 100000;       // slots
    std::uint64_t seed = 1;
};

struct SimPoint {
    double offered_load = 0.0;
    double throughput = 0.0; // delivered payload bits / measured slot-bits
    std::uint64_t delivered_bits = 0;
    std::uint64_t wasted_bits = 0;   // failed attempts, full slots
    std::uint64_t overhead_bits = 0; // grant headers + request slots
    std::uint64_t idle_bits = 0;
    long measured_slots = 0;
    long packets_delivered = 0;
    long attempts = 0;
    bool saturated = false; // queue hit the memory guard; point still valid
};

struct CurvePoint {
    double offered_load = 0.0;
    double throughput = 0.0; // mean over seeds
    double ci_low = 0.0;
    double ci_high = 0.0;
    int seed_count = 0;
};

struct ThroughputCurve {
    std::vector<CurvePoint> points;
    double measured_capacity = 0.0; // max mean throughput over the grid
};

// One full run at a single offered load.  Strictly sequential; the result is
// a pure function of the config.
SimPoint run_sim(const SimConfig& config);

// One run_sim per (load, seed) pair, seeds base.seed .. base.seed+seed_count-1.
// Pairs are independent, so they may run on the thread pool; results are
// reduced in a fixed order and match the serial path bit for bit.
ThroughputCurve sweep_load(const SimConfig& base, const std::vector<double>& loads,
                           int seed_count = 10, bool parallel = true);

} // namespace radiolim

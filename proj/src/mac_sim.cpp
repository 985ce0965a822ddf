#include "radiolim/mac_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <queue>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "radiolim/errors.hpp"
#include "radiolim/rng.hpp"

namespace radiolim {

namespace {

constexpr int kMinislots = 4;
constexpr int kBackoffCap = 1024;    // max contention window, request slots
constexpr long kRequestValve = 64;   // force a request slot at least this often
constexpr long kQueueCap = 1l << 21; // memory guard; beyond it arrivals drop

void check_config(const SimConfig& c) {
    if (c.stations < 1) throw config_error("stations must be >= 1");
    if (!(c.offered_load > 0.0) || !std::isfinite(c.offered_load))
        throw config_error("offered_load must be positive");
    if (c.slot_size < 1) throw config_error("slot_size must be >= 1 bit");
    if (c.reservation_overhead < 0) throw config_error("reservation_overhead must be >= 0");
    if (c.duration < 100) throw config_error("duration must be >= 100 slots");
    if (!(c.ser >= 0.0) || c.ser >= 1.0) throw config_error("ser must be in [0, 1)");
    switch (c.packet_law.kind) {
    case PacketLawKind::Geometric:
        if (!(c.packet_law.mean_slots >= 1.0))
            throw config_error("geometric mean_slots must be >= 1");
        break;
    case PacketLawKind::Deterministic:
        if (c.packet_law.slots < 1) throw config_error("deterministic slots must be >= 1");
        break;
    }
    // every packet must carry positive payload
    long min_bits = static_cast<long>(law_min_slots(c.packet_law)) * c.slot_size;
    if (c.reservation_overhead >= min_bits)
        throw config_error("reservation_overhead must leave room for payload in the shortest packet");
}

struct Station {
    std::queue<int> pending; // durations awaiting a reservation
    long reserved = 0;       // packets granted (queued or in service)
    bool contending = false;
    int backoff = 0;    // request slots to sit out
    int collisions = 0; // consecutive collisions, drives the window
};

int draw_duration(const PacketLaw& law, TrialRng& rng) {
    if (law.kind == PacketLawKind::Deterministic) return law.slots;
    long d = rng.geometric(law.mean_slots);
    return static_cast<int>(std::min(d, 1l << 24));
}

} // namespace

double law_mean_slots(const PacketLaw& law) {
    return law.kind == PacketLawKind::Deterministic ? static_cast<double>(law.slots)
                                                    : law.mean_slots;
}

int law_min_slots(const PacketLaw& law) {
    return law.kind == PacketLawKind::Deterministic ? law.slots : 1;
}

SimPoint run_sim(const SimConfig& config) {
    check_config(config);

    // Dedicated streams keep arrivals/durations identical across configs that
    // differ only in error rate or protocol state (paired comparisons).
    TrialRng arrivals(config.seed, 11);
    TrialRng contention(config.seed, 12);
    TrialRng errors(config.seed, 13);

    const int ss = config.slot_size;
    const std::uint64_t ov = static_cast<std::uint64_t>(config.reservation_overhead);

    std::vector<Station> stations(static_cast<size_t>(config.stations));
    std::deque<std::pair<int, int>> fifo; // (station, duration) granted, in order
    long contenders = 0;
    long total_queued = 0;

    bool in_flight = false;
    int att_station = 0;
    int att_tau = 0;
    long att_remaining = 0;

    SimPoint out;
    out.offered_load = config.offered_load;
    const long warmup_target = config.duration / 10;
    bool measuring = false;
    long last_request = -kRequestValve;

    auto complete_attempt = [&]() {
        in_flight = false;
        std::uint64_t bits =
            static_cast<std::uint64_t>(att_tau) * static_cast<std::uint64_t>(ss);
        double payload_bits = static_cast<double>(bits - ov);
        double p_fail =
            config.ser > 0.0 ? 1.0 - std::pow(1.0 - config.ser, payload_bits) : 0.0;
        double u = errors.uniform01(); // always drawn: keeps streams aligned
        bool fail = u < p_fail;
        if (measuring) {
            out.measured_slots += att_tau;
            ++out.attempts;
            if (fail) {
                out.wasted_bits += bits;
            } else {
                out.overhead_bits += ov;
                out.delivered_bits += bits - ov;
                ++out.packets_delivered;
            }
        }
        if (fail) {
            fifo.emplace_front(att_station, att_tau); // immediate retry
        } else {
            --stations[static_cast<size_t>(att_station)].reserved;
            --total_queued;
        }
    };

    for (long t = 0; t < config.duration; ++t) {
        // the measurement window opens at the first slot boundary past the
        // warm-up target with no attempt in flight, so attempts never straddle it
        if (!measuring && t >= warmup_target && !in_flight) measuring = true;

        // arrivals first: they are eligible for a grant from this slot on
        long n = arrivals.poisson(config.offered_load);
        for (long k = 0; k < n; ++k) {
            int st = static_cast<int>(
                arrivals.below(static_cast<std::uint64_t>(config.stations)));
            int tau = draw_duration(config.packet_law, arrivals);
            if (total_queued >= kQueueCap) {
                out.saturated = true; // guard tripped; drop, server stays busy
                continue;
            }
            ++total_queued;
            Station& s = stations[static_cast<size_t>(st)];
            if (s.reserved > 0) {
                // piggyback: the open grant carries the new reservation
                fifo.emplace_back(st, tau);
                ++s.reserved;
            } else {
                s.pending.push(tau);
                if (!s.contending) {
                    s.contending = true;
                    s.backoff = 0;
                    s.collisions = 0;
                    ++contenders;
                }
            }
        }

        if (!in_flight) {
            bool want_request =
                contenders > 0 && (fifo.empty() || t - last_request >= kRequestValve);
            if (want_request) {
                last_request = t;
                if (measuring) {
                    ++out.measured_slots;
                    out.overhead_bits += static_cast<std::uint64_t>(ss);
                }
                int counts[kMinislots] = {0, 0, 0, 0};
                int owner[kMinislots] = {-1, -1, -1, -1};
                std::vector<int> talkers;
                for (int i = 0; i < config.stations; ++i) {
                    Station& s = stations[static_cast<size_t>(i)];
                    if (!s.contending) continue;
                    if (s.backoff > 0) {
                        --s.backoff;
                        continue;
                    }
                    int mini = static_cast<int>(contention.below(kMinislots));
                    ++counts[mini];
                    owner[mini] = i;
                    talkers.push_back(i);
                }
                for (int i : talkers) {
                    Station& s = stations[static_cast<size_t>(i)];
                    bool won = false;
                    for (int m = 0; m < kMinislots; ++m)
                        if (counts[m] == 1 && owner[m] == i) won = true;
                    if (won) {
                        while (!s.pending.empty()) {
                            fifo.emplace_back(i, s.pending.front());
                            s.pending.pop();
                            ++s.reserved;
                        }
                        s.contending = false;
                        s.collisions = 0;
                        --contenders;
                    } else {
                        ++s.collisions;
                        int window = static_cast<int>(
                            std::min<long>(1l << std::min(s.collisions, 10), kBackoffCap));
                        s.backoff = static_cast<int>(
                            contention.below(static_cast<std::uint64_t>(window)));
                    }
                }
                continue;
            }
            if (fifo.empty()) {
                if (measuring) {
                    ++out.measured_slots;
                    out.idle_bits += static_cast<std::uint64_t>(ss);
                }
                continue;
            }
            att_station = fifo.front().first;
            att_tau = fifo.front().second;
            fifo.pop_front();
            in_flight = true;
            att_remaining = att_tau;
        }

        // a data slot of the running attempt
        if (--att_remaining == 0) complete_attempt();
    }

    if (out.measured_slots > 0)
        out.throughput = static_cast<double>(out.delivered_bits) /
                         (static_cast<double>(out.measured_slots) * static_cast<double>(ss));
    return out;
}

ThroughputCurve sweep_load(const SimConfig& base, const std::vector<double>& loads,
                           int seed_count, bool parallel) {
    if (loads.size() < 5) throw config_error("load grid needs at least 5 points");
    for (double g : loads)
        if (!(g > 0.0) || !std::isfinite(g)) throw config_error("loads must be positive");
    if (seed_count < 1) throw config_error("seed_count must be >= 1");

    const long total = static_cast<long>(loads.size()) * seed_count;
    std::vector<double> s_of(static_cast<size_t>(total));

    auto cell = [&](long idx) {
        SimConfig c = base;
        c.offered_load = loads[static_cast<size_t>(idx) / static_cast<size_t>(seed_count)];
        c.seed = base.seed + static_cast<std::uint64_t>(idx % seed_count);
        s_of[static_cast<size_t>(idx)] = run_sim(c).throughput;
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long idx = 0; idx < total; ++idx) cell(idx);
    } else {
        for (long idx = 0; idx < total; ++idx) cell(idx);
    }

    ThroughputCurve curve;
    curve.points.reserve(loads.size());
    for (size_t li = 0; li < loads.size(); ++li) {
        double mean = 0.0;
        for (int s = 0; s < seed_count; ++s)
            mean += s_of[li * static_cast<size_t>(seed_count) + static_cast<size_t>(s)];
        mean /= seed_count;
        double var = 0.0;
        for (int s = 0; s < seed_count; ++s) {
            double d =
                s_of[li * static_cast<size_t>(seed_count) + static_cast<size_t>(s)] - mean;
            var += d * d;
        }
        double se = seed_count > 1
                        ? std::sqrt(var / (static_cast<double>(seed_count) *
                                           (static_cast<double>(seed_count) - 1.0)))
                        : 0.0;
        CurvePoint p;
        p.offered_load = loads[li];
        p.throughput = mean;
        p.ci_low = mean - 1.96 * se;
        p.ci_high = mean + 1.96 * se;
        p.seed_count = seed_count;
        curve.points.push_back(p);
        curve.measured_capacity = std::max(curve.measured_capacity, mean);
    }
    return curve;
}

} // namespace radiolim

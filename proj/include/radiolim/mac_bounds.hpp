#pragma once

namespace radiolim {

// Entropy in bits of the geometric packet-duration law on {1, 2, ...} with
// the given mean number of slots. Mean 1 is the deterministic edge, zero
// entropy.
double geometric_entropy(double mean_slots);

// Least achievable per-packet reservation overhead, in bits, for a
// distributed reservation discipline whose queue behaves like the named
// model. `duration_entropy_bits` is the entropy of the packet-duration law;
// the queue-model constant is added on top.
double overhead_infimum_mm1(double duration_entropy_bits);
double overhead_infimum_mm1n(double duration_entropy_bits, long buffer);
double overhead_infimum_md1(double duration_entropy_bits);

// Capacity ceiling of a reservation channel: 1 / (1 + relative_overhead),
// where relative_overhead is overhead per packet over payload per packet.
double capacity_upper(double relative_overhead);

// Same ceiling with a noisy symbol channel folded in: channel_rate is the
// per-symbol information rate in [0, 1], overhead_bits the per-packet
// signaling cost, mean_packet_bits the mean payload size.
double capacity_upper_with_errors(double channel_rate, double overhead_bits,
                                  double mean_packet_bits);

// Per-symbol information rate of the m-ary symmetric channel relative to a
// clean channel: capacity at error rate p over log2 m.
double symbol_rate_efficiency(int m, double symbol_error);

} // namespace radiolim

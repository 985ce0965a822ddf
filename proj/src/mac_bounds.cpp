#include "radiolim/mac_bounds.hpp"

#include <cmath>

#include "radiolim/channel.hpp"
#include "radiolim/errors.hpp"

namespace radiolim {

double geometric_entropy(double mean_slots) {
    if (mean_slots < 1.0) throw domain_error("mean duration below one slot");
    double p = 1.0 / mean_slots;
    if (p >= 1.0) return 0.0;
    return (-(1.0 - p) * std::log2(1.0 - p) - p * std::log2(p)) / p;
}

double overhead_infimum_mm1(double duration_entropy_bits) {
    if (duration_entropy_bits < 0.0) throw domain_error("negative entropy");
    return 2.0 + duration_entropy_bits;
}

double overhead_infimum_mm1n(double duration_entropy_bits, long buffer) {
    if (duration_entropy_bits < 0.0) throw domain_error("negative entropy");
    if (buffer < 1) throw domain_error("buffer must hold at least one packet");
    double n = static_cast<double>(buffer);
    return 2.0 * (n + std::exp2(-n - 1.0)) / (n + 1.0) + duration_entropy_bits;
}

double overhead_infimum_md1(double duration_entropy_bits) {
    if (duration_entropy_bits < 0.0) throw domain_error("negative entropy");
    return 1.854 + duration_entropy_bits;
}

double capacity_upper(double relative_overhead) {
    if (relative_overhead < 0.0) throw domain_error("negative relative overhead");
    return 1.0 / (1.0 + relative_overhead);
}

double capacity_upper_with_errors(double channel_rate, double overhead_bits,
                                  double mean_packet_bits) {
    if (channel_rate <= 0.0 || channel_rate > 1.0)
        throw domain_error("channel rate must be in (0, 1]");
    if (overhead_bits < 0.0) throw domain_error("negative overhead");
    if (mean_packet_bits <= 0.0) throw domain_error("packet size must be positive");
    return channel_rate / (1.0 + overhead_bits / (mean_packet_bits * channel_rate));
}

double symbol_rate_efficiency(int m, double symbol_error) {
    return mary_capacity(m, symbol_error) / std::log2(static_cast<double>(m));
}

} // namespace radiolim

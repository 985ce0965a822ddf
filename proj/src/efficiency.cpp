#include "radiolim/efficiency.hpp"

#include <cmath>
#include <limits>

#include "radiolim/errors.hpp"

namespace radiolim {

double icse(const InvariantPoint& p, const SerModel& model) {
    double h2 = esinr(p);
    double cap = mary_capacity(p.alphabet_size, ser(model, p.alphabet_size, h2));
    return cap / (p.signal_base / 2.0);
}

double icpe(const InvariantPoint& p, const SerModel& model) {
    double se = icse(p, model);
    if (se <= 0.0) return std::numeric_limits<double>::infinity();
    return p.amplitude * p.amplitude / se;
}

double icpe_joule_per_se(double w, double noise_density, double signal_base) {
    if (noise_density <= 0.0) throw domain_error("noise density must be positive");
    if (signal_base <= 0.0) throw domain_error("signal base must be positive");
    return w * noise_density * signal_base / 2.0;
}

double icpe_joule_per_bit(double w_joule_se, double signal_base) {
    if (signal_base <= 0.0) throw domain_error("signal base must be positive");
    return w_joule_se * signal_base / 2.0;
}

double continuous_icse(double amplitude) {
    return continuous_se(amplitude * amplitude);
}

double continuous_icpe(double amplitude) {
    double se = continuous_icse(amplitude);
    if (se <= 0.0) return std::numeric_limits<double>::infinity();
    return amplitude * amplitude / se;
}

} // namespace radiolim

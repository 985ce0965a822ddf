#pragma once

#include "radiolim/channel.hpp"

namespace radiolim {

// Criterion of spectral efficiency, invariant form: capacity per unit of
// B_s/2 at the operating point, bit/s/Hz.
double icse(const InvariantPoint& p, const SerModel& model);

// Criterion of power efficiency, invariant form: SNR spent per achieved
// bit/s/Hz, w = g^2 / icse. Dimensionless; lower is better.
double icpe(const InvariantPoint& p, const SerModel& model);

// Same criterion in J/bit per (bit/s/Hz), given one-sided noise density in
// W/Hz: w * N0 * B_s / 2.
double icpe_joule_per_se(double w, double noise_density, double signal_base);

// Energy per information bit in J/bit: the J-per-spectral-efficiency form
// times B_s / 2 once more.
double icpe_joule_per_bit(double w_joule_se, double signal_base);

// The continuous-channel reference pair at SNR g^2: se = log2(1 + g^2),
// w = g^2 / se. Used as the outer bound in reports.
double continuous_icse(double amplitude);
double continuous_icpe(double amplitude);

} // namespace radiolim

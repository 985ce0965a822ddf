#pragma once

#include <vector>

#include "radiolim/channel.hpp"

namespace radiolim {

// One search axis. Free axes are gridded (log or linear) and must carry at
// least 16 points; a fixed axis pins the variable to `lo`.
struct GridAxis {
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
    bool log_spaced = true;
    bool fixed = false;
};

std::vector<double> axis_values(const GridAxis& axis);

struct SearchDomain {
    std::vector<int> m_set;
    GridAxis amplitude{0.1, 10.0, 33, true, false};
    GridAxis signal_base{2.0, 65536.0, 129, true, false};
};

enum class ExtremumKind { PowerMin, SpectralMax };

struct ExtremumResult {
    ExtremumKind kind = ExtremumKind::PowerMin;
    InvariantPoint point;
    double value = 0.0; // the optimized criterion at `point`
    double icse_value = 0.0;
    double icpe_value = 0.0;
    bool constraint_active = false;
    double refinement_tolerance = 1e-9;
    // Near-minimal-power band around the maximizer (spectral-max only):
    // base values at which the power cost meets the slack boundary.
    double band_lo = 0.0;
    double band_hi = 0.0;
    bool interior = false;
};

// Minimizes the power criterion over the domain subject to a spectral
// efficiency floor. Coarse grid first, then golden-section refinement of the
// free continuous variables at the winning alphabet; near-ties resolve
// toward smaller base, then smaller alphabet, then smaller amplitude.
// Throws infeasible_error (carrying the closest miss) when no grid point
// meets the floor.
ExtremumResult minimize_power(const SearchDomain& domain, double spectral_floor,
                              const SerModel& model);

// Maximizes the spectral criterion at fixed amplitude over alphabet and
// base, restricted to bases whose power cost stays within (1 + power_slack)
// of the per-alphabet minimum. Reports the feasible base band of the
// winning alphabet and whether the maximum is interior to it.
ExtremumResult maximize_spectral(const SearchDomain& domain, const SerModel& model,
                                 double power_slack);

struct PowerConstantReport {
    int alphabet_size = 0;
    std::vector<double> amplitudes;
    std::vector<double> minima; // min-over-base power criterion per amplitude
    std::vector<double> bases;  // argmin base per amplitude
    double relative_spread = 0.0;
};

// Unconstrained min-over-base power criterion at each amplitude sample.
// The base axis deliberately reaches far below the display range: the
// infimum of the binary family sits at vanishing effective SNR.
PowerConstantReport verify_power_constant(int alphabet_size,
                                          const std::vector<double>& amplitudes,
                                          const SerModel& model,
                                          const GridAxis& base_axis = {1e-3, 65536.0, 257,
                                                                       true, false});

struct TrendRow {
    double amplitude = 0.0;
    int alphabet_size = 0;
    double signal_base = 0.0;
    double icse_value = 0.0;
    double icpe_value = 0.0;
    bool interior = false;
};

struct TrendReport {
    std::vector<TrendRow> rows;
    // Strict growth of the optimal base as the amplitude series descends.
    // A coupling-free control model keeps the base pinned and clears this.
    bool base_strictly_increasing = false;
};

// Constrained spectral maximization per amplitude in a strictly descending
// series; the optimal base should grow as the channel worsens.
TrendReport optimal_complexity_trend(const std::vector<double>& amplitudes_descending,
                                     const std::vector<int>& m_set, const SerModel& model,
                                     const GridAxis& base_axis, double power_slack);

} // namespace radiolim

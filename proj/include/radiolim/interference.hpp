#pragma once

#include <cstdint>
#include <vector>

#include "radiolim/signals.hpp"

namespace radiolim {

// Independent zero-mean gaussian spreads for the five reception error
// components. A zero spread pins its component to exactly zero in every
// trial, so scaling the whole distribution by zero reproduces the clean
// ensemble bit-identically.
struct ErrorDistribution {
    double amplitude_sd = 0.0;
    double delay_sd_chips = 0.0;
    double duration_sd = 0.0;
    double freq_sd_rad_per_chip = 0.0;
    double phase_sd_rad = 0.0;
};

ErrorDistribution scaled(const ErrorDistribution& d, double scale);

// Neighbor cell: distance from the reference receiver and how many of its
// signals are active. Amplitude attenuation follows the power-law
// (distance / reference_distance)^(-exponent / 2).
struct CellSite {
    double distance = 2.0;
    int actives = 0;
};

struct CellLayout {
    double reference_distance = 1.0;
    double path_loss_exponent = 3.5;
    std::vector<CellSite> cells;
};

double amplitude_attenuation(const CellLayout& layout, double distance);

// Monte Carlo run plan. Trials map to per-trial random streams derived from
// the seed, so the estimate does not depend on `parallel` or on how many
// threads execute the loop.
struct McRun {
    long trials = 10000;
    std::uint64_t seed = 1;
    bool parallel = true;
};

struct PowerEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

// One interference experiment: a reference-cell ensemble with one desired
// signal, optional neighbor cells with their own ensembles, and a thermal
// noise floor. Neighbor-cell signals are cyclically shifted by a uniform
// random whole number of chips each trial (cells are not slot-aligned);
// reference-cell signals are aligned.
struct InterferenceScenario {
    SignalEnsemble ensemble;
    int desired = 0;
    int reference_actives = -1; // waveforms [0, n) active; -1 means all
    CellLayout layout;
    std::vector<SignalEnsemble> cell_ensembles; // one per layout cell
    double thermal_power = 0.0;
    bool desired_distorted = true;
};

// Received power of the desired signal after its own reception error:
// mean of (Re K)^2 over trials against the clean matched filter.
PowerEstimate desired_power(const InterferenceScenario& sc, const ErrorDistribution& d,
                            const McRun& mc);

// Total same-cell interference power at the desired matched filter.
PowerEstimate intra_cell_power(const InterferenceScenario& sc, const ErrorDistribution& d,
                               const McRun& mc);

// Total neighbor-cell interference power, attenuation applied per cell.
PowerEstimate inter_cell_power(const InterferenceScenario& sc, const ErrorDistribution& d,
                               const McRun& mc);

struct SinrEstimate {
    PowerEstimate signal;
    PowerEstimate intra;
    PowerEstimate inter;
    double thermal_power = 0.0;
    double sinr = 0.0;
};

// All three components from one pass over common random numbers; the ratio
// uses the component means.
SinrEstimate estimate_sinr(const InterferenceScenario& sc, const ErrorDistribution& d,
                           const McRun& mc);

struct ScaleRow {
    double scale = 0.0;
    SinrEstimate estimate;
};

// Reruns the scenario with the error spreads multiplied by each scale, same
// seed throughout, so rows differ only through the scale factor.
std::vector<ScaleRow> asymptotic_sweep(const InterferenceScenario& sc,
                                       const ErrorDistribution& d,
                                       const std::vector<double>& scales, const McRun& mc);

struct DegreeRow {
    int degree = 0;
    long period = 0;
    double rms_inter = 0.0;
    double std_error = 0.0;
};

// Neighbor-cell suppression as the sequence family grows: a ring of cells
// runs length-(2^degree - 1) sequence ensembles (distinct feedback
// polynomials round-robin, the reference takes the first), and the row
// records the root-mean-square single-interferer correlation.
std::vector<DegreeRow> degree_suppression_sweep(const std::vector<int>& degrees, int cells,
                                                int actives_per_cell, double distance_ratio,
                                                double path_loss_exponent, int oversampling,
                                                const ErrorDistribution& d, const McRun& mc);

// Least-squares slope of ln(y) against ln(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace radiolim

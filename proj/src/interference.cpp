#include "radiolim/interference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radiolim/errors.hpp"
#include "radiolim/rng.hpp"

namespace radiolim {

namespace {

int active_count(const InterferenceScenario& sc) {
    return sc.reference_actives < 0 ? sc.ensemble.size() : sc.reference_actives;
}

void check_scenario(const InterferenceScenario& sc, const ErrorDistribution& d,
                    const McRun& mc) {
    if (mc.trials < 1 || mc.trials > 100000000l)
        throw config_error("trial count must be in [1, 1e8]");
    if (sc.ensemble.size() < 1) throw config_error("reference ensemble is empty");
    int actives = active_count(sc);
    if (actives < 1 || actives > sc.ensemble.size())
        throw config_error("active count outside the reference ensemble");
    if (sc.desired < 0 || sc.desired >= actives)
        throw config_error("desired signal index outside the active set");
    if (sc.thermal_power < 0.0) throw config_error("negative thermal power");
    if (d.amplitude_sd < 0.0 || d.delay_sd_chips < 0.0 || d.duration_sd < 0.0 ||
        d.freq_sd_rad_per_chip < 0.0 || d.phase_sd_rad < 0.0)
        throw config_error("error spreads must be non-negative");
    if (d.duration_sd > 0.2)
        throw config_error("duration spread above 0.2 leaves the model's validity range");
    if (sc.layout.reference_distance <= 0.0) throw config_error("reference distance must be positive");
    if (sc.layout.path_loss_exponent < 0.0) throw config_error("negative path-loss exponent");
    if (!sc.layout.cells.empty() && sc.cell_ensembles.size() != sc.layout.cells.size())
        throw config_error("one signal ensemble per neighbor cell is required");
    for (size_t j = 0; j < sc.layout.cells.size(); ++j) {
        const CellSite& cell = sc.layout.cells[j];
        if (cell.distance < sc.layout.reference_distance)
            throw config_error("neighbor cell inside the reference distance");
        if (cell.actives < 0) throw config_error("negative active count");
        if (cell.actives > 0) {
            const SignalEnsemble& ens = sc.cell_ensembles[j];
            if (cell.actives > ens.size())
                throw config_error("cell activates more signals than its ensemble holds");
            if (ens.samples() != sc.ensemble.samples() || ens.oversampling != sc.ensemble.oversampling)
                throw config_error("cell ensembles must share the reference sampling grid");
        }
    }
}

ErrorVector draw_error(TrialRng& rng, const ErrorDistribution& d) {
    ErrorVector e;
    e.amplitude = d.amplitude_sd * rng.normal();
    e.delay_chips = d.delay_sd_chips * rng.normal();
    // Tail clamp: a draw at the duration degeneracy would abort the trial,
    // so the distribution is truncated just inside it.
    e.duration_scale = std::clamp(d.duration_sd * rng.normal(), -0.999, 0.999);
    e.freq_rad_per_chip = d.freq_sd_rad_per_chip * rng.normal();
    e.phase_rad = d.phase_sd_rad * rng.normal();
    return e;
}

double re_sq(const cplx& k) { return k.real() * k.real(); }

struct TrialValues {
    double sig = 0.0;
    double intra = 0.0;
    double inter = 0.0;
};

// One Monte Carlo trial. The draw order is fixed: desired error first, then
// same-cell interferers ascending, then per cell ascending one chip shift
// and one error vector per active. Every quantity draws all of them, which
// keeps the three component estimates on common random numbers.
TrialValues run_trial(const InterferenceScenario& sc, const ErrorDistribution& d,
                      std::uint64_t seed, long t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    int ovs = sc.ensemble.oversampling;
    const auto& ref = sc.ensemble.waveforms[sc.desired];
    TrialValues out;

    ErrorVector own = draw_error(rng, d);
    if (sc.desired_distorted)
        out.sig = re_sq(correlation(ref, apply_errors(ref, ovs, own)));
    else
        out.sig = 1.0;

    int actives = active_count(sc);
    for (int j = 0; j < actives; ++j) {
        if (j == sc.desired) continue;
        ErrorVector e = draw_error(rng, d);
        out.intra += re_sq(correlation(ref, apply_errors(sc.ensemble.waveforms[j], ovs, e)));
    }

    for (size_t J = 0; J < sc.layout.cells.size(); ++J) {
        const CellSite& cell = sc.layout.cells[J];
        if (cell.actives == 0) continue;
        const SignalEnsemble& ens = sc.cell_ensembles[J];
        double a = amplitude_attenuation(sc.layout, cell.distance);
        double a2 = a * a;
        for (int idx = 0; idx < cell.actives; ++idx) {
            int shift = static_cast<int>(rng.below(static_cast<std::uint64_t>(ens.chips)));
            ErrorVector e = draw_error(rng, d);
            auto shifted = cyclic_shift(ens.waveforms[idx], ens.oversampling, shift);
            out.inter += a2 * re_sq(correlation(ref, apply_errors(shifted, ens.oversampling, e)));
        }
    }
    return out;
}

PowerEstimate summarize(const std::vector<double>& values) {
    long n = static_cast<long>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var = n > 1 ? var / static_cast<double>(n - 1) : 0.0;
    PowerEstimate est;
    est.mean = mean;
    est.std_error = std::sqrt(var / static_cast<double>(n));
    est.trials = n;
    return est;
}

SinrEstimate run_components(const InterferenceScenario& sc, const ErrorDistribution& d,
                            const McRun& mc) {
    check_scenario(sc, d, mc);
    long n = mc.trials;
    std::vector<double> sig(n), intra(n), inter(n);
    if (mc.parallel) {
#pragma omp parallel for schedule(static)
        for (long t = 0; t < n; ++t) {
            TrialValues v = run_trial(sc, d, mc.seed, t);
            sig[t] = v.sig;
            intra[t] = v.intra;
            inter[t] = v.inter;
        }
    } else {
        for (long t = 0; t < n; ++t) {
            TrialValues v = run_trial(sc, d, mc.seed, t);
            sig[t] = v.sig;
            intra[t] = v.intra;
            inter[t] = v.inter;
        }
    }
    SinrEstimate est;
    est.signal = summarize(sig);
    est.intra = summarize(intra);
    est.inter = summarize(inter);
    est.thermal_power = sc.thermal_power;
    double denom = est.intra.mean + est.inter.mean + sc.thermal_power;
    est.sinr = denom > 0.0 ? est.signal.mean / denom : std::numeric_limits<double>::infinity();
    return est;
}

} // namespace

ErrorDistribution scaled(const ErrorDistribution& d, double scale) {
    if (scale < 0.0) throw domain_error("negative error scale");
    ErrorDistribution s = d;
    s.amplitude_sd *= scale;
    s.delay_sd_chips *= scale;
    s.duration_sd *= scale;
    s.freq_sd_rad_per_chip *= scale;
    s.phase_sd_rad *= scale;
    return s;
}

double amplitude_attenuation(const CellLayout& layout, double distance) {
    if (layout.reference_distance <= 0.0) throw domain_error("reference distance must be positive");
    if (distance < layout.reference_distance)
        throw domain_error("distance inside the reference distance");
    return std::pow(distance / layout.reference_distance, -layout.path_loss_exponent / 2.0);
}

PowerEstimate desired_power(const InterferenceScenario& sc, const ErrorDistribution& d,
                            const McRun& mc) {
    return run_components(sc, d, mc).signal;
}

PowerEstimate intra_cell_power(const InterferenceScenario& sc, const ErrorDistribution& d,
                               const McRun& mc) {
    return run_components(sc, d, mc).intra;
}

PowerEstimate inter_cell_power(const InterferenceScenario& sc, const ErrorDistribution& d,
                               const McRun& mc) {
    return run_components(sc, d, mc).inter;
}

SinrEstimate estimate_sinr(const InterferenceScenario& sc, const ErrorDistribution& d,
                           const McRun& mc) {
    return run_components(sc, d, mc);
}

std::vector<ScaleRow> asymptotic_sweep(const InterferenceScenario& sc,
                                       const ErrorDistribution& d,
                                       const std::vector<double>& scales, const McRun& mc) {
    if (scales.empty()) throw config_error("scale sweep is empty");
    std::vector<ScaleRow> rows;
    rows.reserve(scales.size());
    for (double s : scales) {
        ScaleRow row;
        row.scale = s;
        row.estimate = run_components(sc, scaled(d, s), mc);
        rows.push_back(row);
    }
    return rows;
}

std::vector<DegreeRow> degree_suppression_sweep(const std::vector<int>& degrees, int cells,
                                                int actives_per_cell, double distance_ratio,
                                                double path_loss_exponent, int oversampling,
                                                const ErrorDistribution& d, const McRun& mc) {
    if (degrees.empty()) throw config_error("degree sweep is empty");
    if (cells < 1 || cells > 32) throw config_error("cell count must be in [1, 32]");
    if (actives_per_cell < 1) throw config_error("each cell needs at least one active signal");
    if (distance_ratio < 1.0) throw config_error("distance ratio must be at least 1");
    std::vector<DegreeRow> rows;
    rows.reserve(degrees.size());
    for (int degree : degrees) {
        if (degree < 2 || degree > 13)
            throw config_error("sweep degrees must be in [2, 13]");
        std::vector<std::uint32_t> polys;
        for (int want = cells + 1; want >= 1; --want) {
            try {
                polys = primitive_polynomials(degree, want);
                break;
            } catch (const config_error&) {
                continue;
            }
        }
        if (polys.empty()) throw config_error("no primitive polynomial found for degree");

        InterferenceScenario sc;
        sc.ensemble = mseq_ensemble(degree, polys[0], 1, oversampling);
        sc.desired = 0;
        sc.reference_actives = 1;
        sc.layout.reference_distance = 1.0;
        sc.layout.path_loss_exponent = path_loss_exponent;
        double att2_sum = 0.0;
        for (int J = 0; J < cells; ++J) {
            CellSite cell;
            cell.distance = distance_ratio;
            cell.actives = actives_per_cell;
            sc.layout.cells.push_back(cell);
            std::uint32_t poly =
                polys.size() > 1 ? polys[1 + (static_cast<size_t>(J) % (polys.size() - 1))]
                                 : polys[0];
            sc.cell_ensembles.push_back(
                mseq_ensemble(degree, poly, actives_per_cell, oversampling));
            double a = amplitude_attenuation(sc.layout, cell.distance);
            att2_sum += a * a * actives_per_cell;
        }

        SinrEstimate est = run_components(sc, d, mc);
        DegreeRow row;
        row.degree = degree;
        row.period = (1l << degree) - 1;
        row.rms_inter = std::sqrt(est.inter.mean / att2_sum);
        row.std_error =
            row.rms_inter > 0.0 ? est.inter.std_error / (2.0 * row.rms_inter * att2_sum) : 0.0;
        rows.push_back(row);
    }
    return rows;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw domain_error("slope needs at least two matched samples");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double n = static_cast<double>(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0) throw domain_error("log slope needs positive samples");
        double lx = std::log(x[i]);
        double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (denom <= 0.0) throw domain_error("degenerate abscissa for slope fit");
    return (n * sxy - sx * sy) / denom;
}

} // namespace radiolim

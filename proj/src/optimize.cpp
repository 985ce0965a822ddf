#include "radiolim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "radiolim/efficiency.hpp"
#include "radiolim/errors.hpp"

namespace radiolim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieBand = 1e-9;   // relative near-tie width for tie-breaking
constexpr int kGoldenIters = 70;    // interval shrinks below 1e-14 relative
constexpr int kBisectIters = 80;

void check_axis(const GridAxis& axis, const char* name, bool allow_fixed) {
    if (axis.lo <= 0.0) throw config_error(std::string(name) + " axis must be positive");
    if (axis.fixed) {
        if (!allow_fixed) throw config_error(std::string(name) + " axis cannot be fixed here");
        return;
    }
    if (axis.hi <= axis.lo) throw config_error(std::string(name) + " axis range is degenerate");
    if (axis.points < 16) throw config_error(std::string(name) + " axis needs at least 16 points");
}

void check_m_set(const std::vector<int>& m_set) {
    if (m_set.empty()) throw config_error("alphabet set is empty");
    for (int m : m_set)
        if (m < 2) throw config_error("alphabet sizes must be at least 2");
}

struct Criteria {
    double se = 0.0;
    double w = kInf;
};

Criteria criteria_at(int m, double g, double base, const SerModel& model) {
    double h2 = g * g * base / 2.0;
    double cap = mary_capacity(m, ser(model, m, h2));
    Criteria c;
    c.se = cap / (base / 2.0);
    c.w = c.se > 0.0 ? g * g / c.se : kInf;
    return c;
}

// true if (w_a, base_a, m_a, g_a) wins the tie-broken comparison
bool better_min(double w_a, double base_a, int m_a, double g_a, double w_b, double base_b,
                int m_b, double g_b) {
    if (!(w_a < kInf)) return false;
    if (!(w_b < kInf)) return true;
    double band = kTieBand * std::max(1.0, std::min(w_a, w_b));
    if (w_a < w_b - band) return true;
    if (w_b < w_a - band) return false;
    if (base_a != base_b) return base_a < base_b;
    if (m_a != m_b) return m_a < m_b;
    return g_a < g_b;
}

template <class F>
double golden_argmin(F&& f, double lo, double hi) {
    if (!(hi > lo)) return lo;
    const double gr = 0.6180339887498948482;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < kGoldenIters; ++i) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? c : d;
}

struct BaseMin {
    double base = 0.0;
    double w = kInf;
};

// Unconstrained min-over-base of the power criterion at fixed (m, g):
// coarse pass over the axis grid, golden refinement in log-base around the
// winning cell.
BaseMin min_over_base(int m, double g, const GridAxis& axis, const SerModel& model) {
    std::vector<double> bases = axis_values(axis);
    long n = static_cast<long>(bases.size());
    std::vector<double> w(n);
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n; ++k) w[k] = criteria_at(m, g, bases[k], model).w;
    long best = 0;
    for (long k = 1; k < n; ++k)
        if (better_min(w[k], bases[k], m, g, w[best], bases[best], m, g)) best = k;
    BaseMin out;
    out.base = bases[best];
    out.w = w[best];
    if (!(out.w < kInf)) return out;
    if (n >= 2) {
        double lo = bases[std::max(0l, best - 1)];
        double hi = bases[std::min(n - 1, best + 1)];
        auto f = [&](double t) { return criteria_at(m, g, std::exp(t), model).w; };
        double t = golden_argmin(f, std::log(lo), std::log(hi));
        double refined_base = std::exp(t);
        double refined_w = criteria_at(m, g, refined_base, model).w;
        if (refined_w < out.w) {
            out.base = refined_base;
            out.w = refined_w;
        }
    }
    return out;
}

double solve_w_level(int m, double g, const SerModel& model, double target, double lo,
                     double hi, bool rising) {
    // Bisection for w(base) == target on a bracket where w is monotone;
    // `rising` says whether w increases toward `hi`.
    double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < kBisectIters; ++i) {
        double mid = 0.5 * (a + b);
        double w = criteria_at(m, g, std::exp(mid), model).w;
        bool above = w > target;
        if (above == rising)
            b = mid;
        else
            a = mid;
    }
    return std::exp(0.5 * (a + b));
}

} // namespace

std::vector<double> axis_values(const GridAxis& axis) {
    if (axis.fixed) return {axis.lo};
    check_axis(axis, "grid", false);
    std::vector<double> v(axis.points);
    for (int k = 0; k < axis.points; ++k) {
        double t = static_cast<double>(k) / (axis.points - 1);
        v[k] = axis.log_spaced ? axis.lo * std::pow(axis.hi / axis.lo, t)
                               : axis.lo + (axis.hi - axis.lo) * t;
    }
    return v;
}

ExtremumResult minimize_power(const SearchDomain& domain, double spectral_floor,
                              const SerModel& model) {
    check_m_set(domain.m_set);
    check_axis(domain.amplitude, "amplitude", true);
    check_axis(domain.signal_base, "base", true);
    if (domain.amplitude.fixed && domain.signal_base.fixed)
        throw config_error("at least one search variable must be free");
    if (spectral_floor < 0.0) throw config_error("spectral floor must be non-negative");

    std::vector<double> gs = axis_values(domain.amplitude);
    std::vector<double> bases = axis_values(domain.signal_base);
    long nm = static_cast<long>(domain.m_set.size());
    long ng = static_cast<long>(gs.size());
    long nb = static_cast<long>(bases.size());
    long total = nm * ng * nb;
    std::vector<double> ws(total), ses(total);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
        int m = domain.m_set[idx / (ng * nb)];
        double g = gs[(idx / nb) % ng];
        double base = bases[idx % nb];
        Criteria c = criteria_at(m, g, base, model);
        ws[idx] = c.w;
        ses[idx] = c.se;
    }

    long best = -1;
    long closest = -1; // best infeasible: highest spectral efficiency
    for (long idx = 0; idx < total; ++idx) {
        int m = domain.m_set[idx / (ng * nb)];
        double g = gs[(idx / nb) % ng];
        double base = bases[idx % nb];
        bool feasible = ses[idx] >= spectral_floor && ws[idx] < kInf;
        if (feasible) {
            if (best < 0 ||
                better_min(ws[idx], base, m, g, ws[best], bases[best % nb],
                           domain.m_set[best / (ng * nb)], gs[(best / nb) % ng]))
                best = idx;
        } else if (closest < 0 || ses[idx] > ses[closest]) {
            closest = idx;
        }
    }
    if (best < 0) {
        long c = std::max(closest, 0l);
        throw infeasible_error("no point satisfies the spectral floor",
                               domain.m_set[c / (ng * nb)], bases[c % nb], gs[(c / nb) % ng],
                               ses[c]);
    }

    int m = domain.m_set[best / (ng * nb)];
    double g = gs[(best / nb) % ng];
    double base = bases[best % nb];
    double w = ws[best];

    // Coordinate-wise golden refinement of the free continuous variables,
    // with infeasible points penalized out.
    auto penalized = [&](int mm, double gg, double bb) {
        Criteria c = criteria_at(mm, gg, bb, model);
        return c.se >= spectral_floor ? c.w : kInf;
    };
    for (int round = 0; round < 2; ++round) {
        if (!domain.signal_base.fixed) {
            long k = std::lower_bound(bases.begin(), bases.end(), base) - bases.begin();
            k = std::clamp(k, 0l, nb - 1);
            double lo = bases[std::max(0l, k - 1)], hi = bases[std::min(nb - 1, k + 1)];
            double t = golden_argmin([&](double t) { return penalized(m, g, std::exp(t)); },
                                     std::log(lo), std::log(hi));
            double cand = std::exp(t);
            if (penalized(m, g, cand) < w) {
                base = cand;
                w = penalized(m, g, cand);
            }
        }
        if (!domain.amplitude.fixed) {
            long k = std::lower_bound(gs.begin(), gs.end(), g) - gs.begin();
            k = std::clamp(k, 0l, ng - 1);
            double lo = gs[std::max(0l, k - 1)], hi = gs[std::min(ng - 1, k + 1)];
            double t = golden_argmin([&](double t) { return penalized(m, std::exp(t), base); },
                                     std::log(lo), std::log(hi));
            double cand = std::exp(t);
            if (penalized(m, cand, base) < w) {
                g = cand;
                w = penalized(m, cand, base);
            }
        }
    }

    ExtremumResult out;
    out.kind = ExtremumKind::PowerMin;
    out.point = {m, g, base};
    Criteria fin = criteria_at(m, g, base, model);
    out.value = fin.w;
    out.icse_value = fin.se;
    out.icpe_value = fin.w;
    out.constraint_active =
        spectral_floor > 0.0 && fin.se <= spectral_floor * (1.0 + 1e-6);
    out.band_lo = out.band_hi = base;
    out.interior = false;
    return out;
}

ExtremumResult maximize_spectral(const SearchDomain& domain, const SerModel& model,
                                 double power_slack) {
    check_m_set(domain.m_set);
    if (!domain.amplitude.fixed)
        throw config_error("spectral maximization requires a fixed amplitude");
    check_axis(domain.amplitude, "amplitude", true);
    check_axis(domain.signal_base, "base", false);
    if (!(power_slack > 0.0)) throw config_error("power slack must be positive");
    double g = domain.amplitude.lo;

    int best_m = 0;
    BaseMin best{0.0, kInf};
    for (int m : domain.m_set) {
        BaseMin bm = min_over_base(m, g, domain.signal_base, model);
        if (better_min(bm.w, bm.base, m, g, best.w, best.base, best_m, g)) {
            best = bm;
            best_m = m;
        }
    }
    if (!(best.w < kInf))
        throw infeasible_error("no point with positive spectral efficiency", domain.m_set[0],
                               domain.signal_base.lo, g, 0.0);

    double target = (1.0 + power_slack) * best.w;
    double axis_lo = domain.signal_base.lo, axis_hi = domain.signal_base.hi;
    double w_lo = criteria_at(best_m, g, axis_lo, model).w;
    double w_hi = criteria_at(best_m, g, axis_hi, model).w;
    double band_lo =
        w_lo > target ? solve_w_level(best_m, g, model, target, axis_lo, best.base, false)
                      : axis_lo;
    double band_hi =
        w_hi > target ? solve_w_level(best_m, g, model, target, best.base, axis_hi, true)
                      : axis_hi;

    ExtremumResult out;
    out.kind = ExtremumKind::SpectralMax;
    out.point = {best_m, g, best.base};
    Criteria fin = criteria_at(best_m, g, best.base, model);
    out.value = fin.se;
    out.icse_value = fin.se;
    out.icpe_value = fin.w;
    out.constraint_active = fin.w >= target * (1.0 - 1e-6);
    out.band_lo = band_lo;
    out.band_hi = band_hi;
    out.interior = band_lo > axis_lo * (1.0 + 1e-9) && band_hi < axis_hi * (1.0 - 1e-9);
    return out;
}

PowerConstantReport verify_power_constant(int alphabet_size,
                                          const std::vector<double>& amplitudes,
                                          const SerModel& model, const GridAxis& base_axis) {
    if (alphabet_size < 2) throw config_error("alphabet size must be at least 2");
    if (amplitudes.size() < 3) throw config_error("need at least three amplitude samples");
    for (double g : amplitudes)
        if (g <= 0.0) throw config_error("amplitudes must be positive");
    check_axis(base_axis, "base", false);

    PowerConstantReport rep;
    rep.alphabet_size = alphabet_size;
    rep.amplitudes = amplitudes;
    for (double g : amplitudes) {
        BaseMin bm = min_over_base(alphabet_size, g, base_axis, model);
        if (!(bm.w < kInf))
            throw numerical_error("power criterion is unbounded over the base axis");
        rep.minima.push_back(bm.w);
        rep.bases.push_back(bm.base);
    }
    double lo = *std::min_element(rep.minima.begin(), rep.minima.end());
    double hi = *std::max_element(rep.minima.begin(), rep.minima.end());
    double mean = 0.0;
    for (double v : rep.minima) mean += v;
    mean /= static_cast<double>(rep.minima.size());
    rep.relative_spread = mean > 0.0 ? (hi - lo) / mean : 0.0;
    return rep;
}

TrendReport optimal_complexity_trend(const std::vector<double>& amplitudes_descending,
                                     const std::vector<int>& m_set, const SerModel& model,
                                     const GridAxis& base_axis, double power_slack) {
    if (amplitudes_descending.size() < 2)
        throw config_error("trend needs at least two amplitudes");
    for (size_t i = 1; i < amplitudes_descending.size(); ++i)
        if (!(amplitudes_descending[i] < amplitudes_descending[i - 1]))
            throw config_error("amplitude series must be strictly decreasing");
    if (m_set.size() < 3) throw config_error("trend needs at least three alphabet sizes");

    TrendReport rep;
    for (double g : amplitudes_descending) {
        SearchDomain domain;
        domain.m_set = m_set;
        domain.amplitude = {g, g, 1, true, true};
        domain.signal_base = base_axis;
        ExtremumResult r = maximize_spectral(domain, model, power_slack);
        TrendRow row;
        row.amplitude = g;
        row.alphabet_size = r.point.alphabet_size;
        row.signal_base = r.point.signal_base;
        row.icse_value = r.icse_value;
        row.icpe_value = r.icpe_value;
        row.interior = r.interior;
        rep.rows.push_back(row);
    }
    rep.base_strictly_increasing = true;
    for (size_t i = 1; i < rep.rows.size(); ++i)
        if (!(rep.rows[i].signal_base > rep.rows[i - 1].signal_base * (1.0 + 1e-9)))
            rep.base_strictly_increasing = false;
    return rep;
}

} // namespace radiolim

#include "radiolim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "radiolim/errors.hpp"

namespace radiolim {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
constexpr double kInvSqrt2 = 0.7071067811865475244008444;

double phi(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

// P(correct) for m coherently detected orthogonal signals at per-symbol SNR
// h^2: integral of phi(y - sqrt(2 h^2)) * Phi(y)^(m-1) over y. The integrand
// decays like a Gaussian at both ends, so the trapezoid rule on a symmetric
// window converges spectrally; the resolution self-check below guards the
// truncation choice.
double orth_correct_prob(int m, double h_squared, int nodes, double trunc_sigmas) {
    double mu = std::sqrt(2.0 * h_squared);
    double lo = mu - trunc_sigmas;
    double hi = mu + trunc_sigmas;
    // Phi(y)^(m-1) via exp((m-1) log Phi) keeps large m away from underflow
    // in the product while log Phi stays finite on the window.
    auto integrand = [&](double y) {
        double c = normal_cdf(y);
        if (c <= 0.0) return 0.0;
        return phi(y - mu) * std::exp((m - 1) * std::log(c));
    };
    auto sum_at = [&](int n) {
        double step = (hi - lo) / (n - 1);
        double acc = 0.5 * (integrand(lo) + integrand(hi));
        for (int i = 1; i + 1 < n; ++i) acc += integrand(lo + step * i);
        return acc * step;
    };
    double coarse = sum_at(nodes);
    double fine = sum_at(2 * nodes - 1);
    if (std::abs(fine - coarse) > 1e-6 * std::max(1.0, std::abs(fine)))
        throw numerical_error("orthogonal-coherent quadrature failed its resolution check");
    return std::clamp(fine, 0.0, 1.0);
}

double square_qam_ser(int m, double h_squared) {
    double root = std::sqrt(static_cast<double>(m));
    if (root != std::floor(root))
        throw domain_error("square QAM needs a square alphabet size");
    double per_axis = 2.0 * (1.0 - 1.0 / root) * qfunc(std::sqrt(3.0 * h_squared / (m - 1)));
    double correct = (1.0 - per_axis) * (1.0 - per_axis);
    return std::clamp(1.0 - correct, 0.0, 1.0);
}

} // namespace

double esinr(const InvariantPoint& p) {
    if (p.alphabet_size < 2) throw domain_error("alphabet size must be at least 2");
    if (p.amplitude < 0.0) throw domain_error("amplitude must be non-negative");
    if (p.signal_base <= 0.0) throw domain_error("signal base must be positive");
    return p.amplitude * p.amplitude * p.signal_base / 2.0;
}

double ser(const SerModel& model, int m, double h_squared) {
    if (m < 2) throw domain_error("alphabet size must be at least 2");
    if (h_squared < 0.0) throw domain_error("per-symbol SNR must be non-negative");
    switch (model.kind) {
        case SerKind::OrthogonalCoherent: {
            if (model.nodes < 201) throw config_error("quadrature needs at least 201 nodes");
            if (model.trunc_sigmas < 6.0) throw config_error("quadrature window below 6 sigma");
            if (m == 2) return qfunc(std::sqrt(h_squared));
            return 1.0 - orth_correct_prob(m, h_squared, model.nodes, model.trunc_sigmas);
        }
        case SerKind::SquareQam:
            return square_qam_ser(m, h_squared);
        case SerKind::UnionBoundOrthogonal:
            return std::min((m - 1) * qfunc(std::sqrt(h_squared)), 1.0 - 1.0 / m);
        case SerKind::Constant:
            if (model.constant_p < 0.0 || model.constant_p > 1.0 - 1.0 / m)
                throw config_error("constant error probability outside [0, 1 - 1/m]");
            return model.constant_p;
    }
    throw domain_error("unknown error model");
}

double mary_capacity(int m, double p) {
    if (m < 2) throw domain_error("alphabet size must be at least 2");
    double pmax = 1.0 - 1.0 / m;
    if (p < 0.0 || p > pmax + 1e-12) throw domain_error("error probability outside [0, 1 - 1/m]");
    p = std::clamp(p, 0.0, pmax);
    double cap = std::log2(static_cast<double>(m));
    if (p > 0.0) cap += p * std::log2(p / (m - 1));
    if (p < 1.0) cap += (1.0 - p) * std::log2(1.0 - p);
    return std::max(cap, 0.0);
}

double continuous_se(double snr) {
    if (snr < 0.0) throw domain_error("SNR must be non-negative");
    return std::log2(1.0 + snr);
}

double qfunc(double x) { return 0.5 * std::erfc(x * kInvSqrt2); }

double qfunc_inv(double p) {
    if (p <= 0.0 || p >= 1.0) throw domain_error("tail probability must be inside (0, 1)");
    // Bisection on the monotone tail; 200 halvings of [-40, 40] reach full
    // double precision and this is never on a hot path.
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (qfunc(mid) > p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace radiolim

#pragma once

#include <cstdint>

namespace radiolim {

// Operating point in the invariant coordinates: alphabet size m, relative
// amplitude g (g^2 is the signal-to-noise power ratio), and signal base
// B_s = 2 * bandwidth * duration. The effective per-symbol SNR is
// h^2 = g^2 * B_s / 2.
struct InvariantPoint {
    int alphabet_size = 2;
    double amplitude = 1.0;
    double signal_base = 2.0;
};

double esinr(const InvariantPoint& p);

enum class SerKind {
    OrthogonalCoherent, // m orthogonal signals, coherent detection
    SquareQam,          // square QAM constellation, Gray-coded per axis
    UnionBoundOrthogonal,
    Constant,           // fixed symbol error probability, diagnostic use
};

// Symbol error model. The orthogonal-coherent probability is a single
// integral over the matched filter statistic; `nodes` and `trunc_sigmas`
// control its quadrature. Defaults hold the result well below 1e-9 relative
// error over the ranges used here.
struct SerModel {
    SerKind kind = SerKind::OrthogonalCoherent;
    int nodes = 801;
    double trunc_sigmas = 10.0;
    double constant_p = 0.0;
};

// Symbol error probability at alphabet size m and per-symbol SNR h^2.
double ser(const SerModel& model, int m, double h_squared);

// Capacity in bits per symbol of the m-ary symmetric channel with symbol
// error probability p (errors uniform over the m-1 wrong symbols).
double mary_capacity(int m, double p);

// log2(1 + snr), the continuous-channel reference.
double continuous_se(double snr);

// Gaussian tail Q(x) and its inverse on (0, 1).
double qfunc(double x);
double qfunc_inv(double p);

} // namespace radiolim

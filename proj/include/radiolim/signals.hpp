#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace radiolim {

using cplx = std::complex<double>;

// A family of equal-length, unit-energy complex baseband waveforms sampled
// at `oversampling` points per chip. Energy normalization is the averaged
// form (1/N) * sum |s_k|^2 == 1, so a matched self-correlation reads 1.
struct SignalEnsemble {
    std::string label;
    int oversampling = 1;
    int chips = 0;
    std::vector<std::vector<cplx>> waveforms;

    int size() const { return static_cast<int>(waveforms.size()); }
    int samples() const { return chips * oversampling; }
};

// Binary orthogonal family from the Sylvester construction; size must be a
// power of two in [2, 1024]. Exactly orthogonal at zero offset.
SignalEnsemble walsh_ensemble(int size, int oversampling);

// Distinct cyclic shifts of one maximal-length binary sequence generated by
// the given feedback polynomial (bit k = coefficient of x^k, bit `degree`
// and bit 0 must be set). The polynomial is verified at runtime to produce
// the full period 2^degree - 1; anything shorter is rejected. Any two
// distinct shifts correlate at exactly -1/(2^degree - 1).
SignalEnsemble mseq_ensemble(int degree, std::uint32_t polynomial, int shift_count,
                             int oversampling);

// Smallest-mask primitive feedback polynomials for a degree, found by cycle
// search. `count` beyond the number that exist is a configuration error.
std::vector<std::uint32_t> primitive_polynomials(int degree, int count);

// Multiplicative reception error: amplitude gain (1 + amplitude), timing
// offset in chips, duration stretch (1 + duration_scale), frequency offset
// in radians per chip, and a constant phase in radians.
struct ErrorVector {
    double amplitude = 0.0;
    double delay_chips = 0.0;
    double duration_scale = 0.0;
    double freq_rad_per_chip = 0.0;
    double phase_rad = 0.0;
};

// Applies an error vector to a waveform, evaluated on the nominal sample
// window (the receiver integrates over the nominal duration; whatever the
// distortion pushes outside is lost, gaps are zero). Linear interpolation
// between samples; the all-zero error vector reproduces the input
// bit-identically. |duration_scale| >= 1 is rejected.
std::vector<cplx> apply_errors(const std::vector<cplx>& waveform, int oversampling,
                               const ErrorVector& e);

// Averaged correlation (1/N) * sum conj(a_k) * b_k with N = max(len a, len b)
// and the shorter input zero-padded.
cplx correlation(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Averaged energy (1/N) * sum |s_k|^2.
double signal_energy(const std::vector<cplx>& waveform);

// Cyclic chip rotation by `chip_shift` chips (used for asynchronous
// neighbor-cell alignment).
std::vector<cplx> cyclic_shift(const std::vector<cplx>& waveform, int oversampling,
                               int chip_shift);

} // namespace radiolim

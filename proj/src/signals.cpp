#include "radiolim/signals.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "radiolim/errors.hpp"

namespace radiolim {

namespace {

void check_oversampling(int oversampling) {
    if (oversampling < 1 || oversampling > 64)
        throw config_error("oversampling must be in [1, 64]");
}

// Fibonacci register for p(x) = x^n + sum c_k x^k: the next input bit is the
// XOR of the tapped positions, the output is the bit falling out.
std::uint32_t lfsr_step(std::uint32_t reg, int degree, std::uint32_t taps) {
    std::uint32_t f = static_cast<std::uint32_t>(std::popcount(reg & taps) & 1);
    return (reg >> 1) | (f << (degree - 1));
}

long lfsr_period(int degree, std::uint32_t polynomial) {
    std::uint32_t taps = polynomial & ((1u << degree) - 1u);
    std::uint32_t reg = 1;
    long steps = 0;
    long limit = (1l << degree);
    do {
        reg = lfsr_step(reg, degree, taps);
        ++steps;
    } while (reg != 1 && steps <= limit);
    return steps;
}

void check_polynomial(int degree, std::uint32_t polynomial) {
    if (degree < 2 || degree > 20) throw config_error("sequence degree must be in [2, 20]");
    if (!(polynomial & (1u << degree)) || !(polynomial & 1u))
        throw config_error("feedback polynomial must have the leading and constant terms set");
    if (polynomial >> (degree + 1))
        throw config_error("feedback polynomial has terms above its degree");
}

} // namespace

SignalEnsemble walsh_ensemble(int size, int oversampling) {
    check_oversampling(oversampling);
    if (size < 2 || size > 1024 || (size & (size - 1)) != 0)
        throw config_error("family size must be a power of two in [2, 1024]");
    SignalEnsemble ens;
    ens.label = "walsh-" + std::to_string(size);
    ens.oversampling = oversampling;
    ens.chips = size;
    ens.waveforms.resize(size);
    for (int i = 0; i < size; ++i) {
        auto& w = ens.waveforms[i];
        w.reserve(static_cast<size_t>(size) * oversampling);
        for (int j = 0; j < size; ++j) {
            double chip = (std::popcount(static_cast<unsigned>(i & j)) & 1) ? -1.0 : 1.0;
            for (int k = 0; k < oversampling; ++k) w.emplace_back(chip, 0.0);
        }
    }
    return ens;
}

SignalEnsemble mseq_ensemble(int degree, std::uint32_t polynomial, int shift_count,
                             int oversampling) {
    check_oversampling(oversampling);
    check_polynomial(degree, polynomial);
    long period = (1l << degree) - 1;
    if (shift_count < 1 || shift_count > period)
        throw config_error("shift count must be in [1, 2^degree - 1]");
    if (lfsr_period(degree, polynomial) != period)
        throw config_error("feedback polynomial is not primitive: register period short of full length");

    std::uint32_t taps = polynomial & ((1u << degree) - 1u);
    std::vector<double> chips(period);
    std::uint32_t reg = 1;
    for (long t = 0; t < period; ++t) {
        chips[t] = (reg & 1u) ? -1.0 : 1.0;
        reg = lfsr_step(reg, degree, taps);
    }

    SignalEnsemble ens;
    ens.label = "mseq-" + std::to_string(degree);
    ens.oversampling = oversampling;
    ens.chips = static_cast<int>(period);
    ens.waveforms.resize(shift_count);
    for (int s = 0; s < shift_count; ++s) {
        auto& w = ens.waveforms[s];
        w.reserve(period * oversampling);
        for (long t = 0; t < period; ++t) {
            double chip = chips[(t + s) % period];
            for (int k = 0; k < oversampling; ++k) w.emplace_back(chip, 0.0);
        }
    }
    return ens;
}

std::vector<std::uint32_t> primitive_polynomials(int degree, int count) {
    if (degree < 2 || degree > 20) throw config_error("sequence degree must be in [2, 20]");
    if (count < 1) throw config_error("polynomial count must be positive");
    std::vector<std::uint32_t> found;
    long period = (1l << degree) - 1;
    std::uint32_t lead = 1u << degree;
    for (std::uint32_t low = 1; low < lead && static_cast<int>(found.size()) < count; low += 2) {
        std::uint32_t candidate = lead | low;
        if (lfsr_period(degree, candidate) == period) found.push_back(candidate);
    }
    if (static_cast<int>(found.size()) < count)
        throw config_error("degree has fewer primitive polynomials than requested");
    return found;
}

std::vector<cplx> apply_errors(const std::vector<cplx>& waveform, int oversampling,
                               const ErrorVector& e) {
    check_oversampling(oversampling);
    if (std::abs(e.duration_scale) >= 1.0)
        throw domain_error("duration error at or past full compression");
    long n = static_cast<long>(waveform.size());
    std::vector<cplx> out(n);
    double delay_samples = e.delay_chips * oversampling;
    double stretch = 1.0 + e.duration_scale;
    double gain = 1.0 + e.amplitude;
    for (long j = 0; j < n; ++j) {
        double u = (j - delay_samples) / stretch;
        cplx sample(0.0, 0.0);
        // The source ramps to zero one sample outside its support, so a
        // vanishing offset loses vanishing energy at the window edges.
        if (u >= -1.0 && u <= static_cast<double>(n)) {
            double fl = std::floor(u);
            long i = static_cast<long>(fl);
            double frac = u - fl;
            cplx a = (i >= 0 && i < n) ? waveform[i] : cplx(0.0, 0.0);
            cplx b = (i + 1 >= 0 && i + 1 < n) ? waveform[i + 1] : cplx(0.0, 0.0);
            sample = a + frac * (b - a);
        }
        double angle = e.freq_rad_per_chip * (static_cast<double>(j) / oversampling) + e.phase_rad;
        cplx rot(std::cos(angle), std::sin(angle));
        out[j] = (sample * rot) * gain;
    }
    return out;
}

cplx correlation(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    size_t n = std::max(a.size(), b.size());
    if (n == 0) throw domain_error("correlation of empty waveforms");
    size_t overlap = std::min(a.size(), b.size());
    cplx acc(0.0, 0.0);
    for (size_t k = 0; k < overlap; ++k) acc += std::conj(a[k]) * b[k];
    return acc / static_cast<double>(n);
}

double signal_energy(const std::vector<cplx>& waveform) {
    if (waveform.empty()) throw domain_error("energy of an empty waveform");
    double acc = 0.0;
    for (const cplx& s : waveform) acc += std::norm(s);
    return acc / static_cast<double>(waveform.size());
}

std::vector<cplx> cyclic_shift(const std::vector<cplx>& waveform, int oversampling,
                               int chip_shift) {
    check_oversampling(oversampling);
    long n = static_cast<long>(waveform.size());
    if (n == 0 || n % oversampling != 0)
        throw domain_error("waveform length is not a whole number of chips");
    long chips = n / oversampling;
    long s = ((chip_shift % chips) + chips) % chips;
    long offset = s * oversampling;
    std::vector<cplx> out(n);
    for (long j = 0; j < n; ++j) out[j] = waveform[(j + offset) % n];
    return out;
}

} // namespace radiolim

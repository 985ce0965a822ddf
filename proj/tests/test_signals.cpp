#include "doctest.h"

#include <cmath>
#include <complex>

#include "radiolim/errors.hpp"
#include "radiolim/signals.hpp"

using namespace radiolim;

TEST_SUITE("signals") {

TEST_CASE("walsh families are exactly orthonormal") {
    for (int size : {2, 8, 64}) {
        auto ens = walsh_ensemble(size, size <= 8 ? 4 : 1);
        REQUIRE(ens.size() == size);
        REQUIRE(static_cast<int>(ens.waveforms[0].size()) == ens.samples());
        for (int i = 0; i < size; ++i) {
            CHECK(signal_energy(ens.waveforms[i]) == 1.0);
            for (int j = 0; j < size; ++j) {
                cplx k = correlation(ens.waveforms[i], ens.waveforms[j]);
                CHECK(k.imag() == 0.0);
                CHECK(k.real() == (i == j ? 1.0 : 0.0));
            }
        }
    }
}

TEST_CASE("walsh size validation") {
    CHECK_THROWS_AS(walsh_ensemble(3, 1), config_error);
    CHECK_THROWS_AS(walsh_ensemble(0, 1), config_error);
    CHECK_THROWS_AS(walsh_ensemble(2048, 1), config_error);
    CHECK_THROWS_AS(walsh_ensemble(8, 0), config_error);
}

TEST_CASE("degree-3 sequence has full period and balance") {
    auto ens = mseq_ensemble(3, 0xB, 7, 1); // x^3 + x + 1
    REQUIRE(ens.chips == 7);
    double sum = 0.0;
    for (const cplx& s : ens.waveforms[0]) sum += s.real();
    CHECK(sum == -1.0);
    for (int i = 0; i < 7; ++i) {
        CHECK(signal_energy(ens.waveforms[i]) == 1.0);
        for (int j = 0; j < 7; ++j) {
            cplx k = correlation(ens.waveforms[i], ens.waveforms[j]);
            if (i == j)
                CHECK(k.real() == 1.0);
            else
                CHECK(k.real() == doctest::Approx(-1.0 / 7.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("shifted sequences stay two-valued with oversampling") {
    auto ens = mseq_ensemble(5, 0x25, 10, 3); // x^5 + x^2 + 1
    REQUIRE(ens.chips == 31);
    for (int i = 0; i < ens.size(); ++i)
        for (int j = i + 1; j < ens.size(); ++j) {
            cplx k = correlation(ens.waveforms[i], ens.waveforms[j]);
            CHECK(std::abs(k) <= 1.0 / 31.0 + 1e-12);
            CHECK(k.real() == doctest::Approx(-1.0 / 31.0).epsilon(1e-14));
        }
}

TEST_CASE("non-primitive polynomials are rejected") {
    // x^4 + x^2 + 1 = (x^2 + x + 1)^2, period 6 of 15.
    CHECK_THROWS_AS(mseq_ensemble(4, 0x15, 3, 1), config_error);
    // Missing constant term.
    CHECK_THROWS_AS(mseq_ensemble(3, 0xA, 3, 1), config_error);
    // Terms above the stated degree.
    CHECK_THROWS_AS(mseq_ensemble(3, 0x1B, 3, 1), config_error);
    CHECK_THROWS_AS(mseq_ensemble(3, 0xB, 8, 1), config_error);
}

TEST_CASE("primitive polynomial search") {
    auto firsts = primitive_polynomials(3, 2);
    REQUIRE(firsts.size() == 2);
    CHECK(firsts[0] == 0xBu); // x^3 + x + 1
    CHECK(firsts[1] == 0xDu); // x^3 + x^2 + 1
    // Degree 5 has exactly six primitive polynomials.
    CHECK(primitive_polynomials(5, 6).size() == 6);
    CHECK_THROWS_AS(primitive_polynomials(5, 7), config_error);
    for (std::uint32_t p : primitive_polynomials(11, 3)) {
        auto ens = mseq_ensemble(11, p, 2, 1);
        CHECK(ens.chips == 2047);
    }
}

TEST_CASE("zero error vector is the identity") {
    auto ens = walsh_ensemble(8, 4);
    ErrorVector none;
    for (const auto& w : ens.waveforms) {
        auto out = apply_errors(w, 4, none);
        REQUIRE(out.size() == w.size());
        for (size_t k = 0; k < w.size(); ++k) {
            CHECK(out[k].real() == w[k].real());
            CHECK(out[k].imag() == w[k].imag());
        }
    }
}

TEST_CASE("pure phase rotation preserves orthogonality exactly") {
    auto ens = walsh_ensemble(8, 2);
    ErrorVector e;
    e.phase_rad = 0.7;
    auto rotated = apply_errors(ens.waveforms[3], 2, e);
    for (int i = 0; i < ens.size(); ++i) {
        cplx k = correlation(ens.waveforms[i], rotated);
        if (i == 3) {
            CHECK(std::abs(k) == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(std::arg(k) == doctest::Approx(0.7).epsilon(1e-12));
        } else {
            // Cancellation of the rotated terms is only as exact as the
            // running sum; the residual sits at machine epsilon, far below
            // any leakage a physical mechanism produces.
            CHECK(std::abs(k) < 1e-15);
        }
    }
}

TEST_CASE("amplitude error scales the correlation") {
    auto ens = walsh_ensemble(4, 2);
    ErrorVector e;
    e.amplitude = 0.25;
    auto scaled = apply_errors(ens.waveforms[1], 2, e);
    cplx k = correlation(ens.waveforms[1], scaled);
    CHECK(k.real() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(correlation(ens.waveforms[0], scaled).real() == 0.0);
}

TEST_CASE("integer-sample delays shift the window") {
    auto ens = walsh_ensemble(4, 2);
    const auto& w = ens.waveforms[2];
    ErrorVector e;
    e.delay_chips = 0.5; // one sample at oversampling 2
    auto shifted = apply_errors(w, 2, e);
    CHECK(shifted[0] == cplx(0.0, 0.0));
    for (size_t k = 1; k < w.size(); ++k) CHECK(shifted[k] == w[k - 1]);
}

TEST_CASE("fractional delay interpolates between samples") {
    std::vector<cplx> ramp{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}};
    ErrorVector e;
    e.delay_chips = 0.5; // half a sample at oversampling 1
    auto out = apply_errors(ramp, 1, e);
    CHECK(out[1].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(out[2].real() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(out[3].real() == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("duration stretch rescales the time axis") {
    std::vector<cplx> ramp{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}};
    ErrorVector e;
    e.duration_scale = 1.0; // read at half speed: u = j / 2
    CHECK_THROWS_AS(apply_errors(ramp, 1, ErrorVector{0, 0, 1.0, 0, 0}), domain_error);
    e.duration_scale = 0.5;
    auto out = apply_errors(ramp, 1, e);
    CHECK(out[3].real() == doctest::Approx(2.0).epsilon(1e-15));
    e.duration_scale = -1.0;
    CHECK_THROWS_AS(apply_errors(ramp, 1, e), domain_error);
}

TEST_CASE("frequency offset erodes the matched correlation") {
    auto ens = walsh_ensemble(8, 4);
    const auto& w = ens.waveforms[5];
    double prev = 1.0;
    for (double f : {0.05, 0.1, 0.2, 0.4}) {
        ErrorVector e;
        e.freq_rad_per_chip = f;
        double mag = std::abs(correlation(w, apply_errors(w, 4, e)));
        CHECK(mag < prev);
        prev = mag;
    }
    CHECK(prev > 0.5);
}

TEST_CASE("phase then amplitude composes sample-exactly") {
    auto ens = walsh_ensemble(8, 2);
    const auto& w = ens.waveforms[6];
    ErrorVector phase_only;
    phase_only.phase_rad = 1.1;
    ErrorVector amp_only;
    amp_only.amplitude = -0.3;
    ErrorVector both;
    both.phase_rad = 1.1;
    both.amplitude = -0.3;
    auto staged = apply_errors(apply_errors(w, 2, phase_only), 2, amp_only);
    auto combined = apply_errors(w, 2, both);
    REQUIRE(staged.size() == combined.size());
    for (size_t k = 0; k < staged.size(); ++k) {
        CHECK(staged[k].real() == combined[k].real());
        CHECK(staged[k].imag() == combined[k].imag());
    }
}

TEST_CASE("correlation zero-pads unequal lengths") {
    std::vector<cplx> a{{1.0, 0.0}, {1.0, 0.0}};
    std::vector<cplx> b{{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
    CHECK(correlation(a, b).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(correlation(b, a).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(correlation({}, {}), domain_error);
}

TEST_CASE("cyclic shifts preserve energy and wrap") {
    auto ens = mseq_ensemble(3, 0xB, 1, 2);
    const auto& w = ens.waveforms[0];
    auto s = cyclic_shift(w, 2, 3);
    CHECK(signal_energy(s) == 1.0);
    for (size_t k = 0; k < w.size(); ++k) CHECK(s[k] == w[(k + 6) % w.size()]);
    auto full = cyclic_shift(w, 2, 7);
    for (size_t k = 0; k < w.size(); ++k) CHECK(full[k] == w[k]);
    auto neg = cyclic_shift(w, 2, -4);
    auto pos = cyclic_shift(w, 2, 3);
    for (size_t k = 0; k < w.size(); ++k) CHECK(neg[k] == pos[k]);
}

} // TEST_SUITE

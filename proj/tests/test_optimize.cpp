#include "doctest.h"

#include <cmath>

#include "radiolim/efficiency.hpp"
#include "radiolim/errors.hpp"
#include "radiolim/optimize.hpp"

using namespace radiolim;

TEST_SUITE("optimize") {

TEST_CASE("axis values hit the endpoints") {
    GridAxis log_axis{1.0, 4096.0, 25, true, false};
    auto v = axis_values(log_axis);
    REQUIRE(v.size() == 25);
    CHECK(v.front() == 1.0);
    CHECK(v.back() == doctest::Approx(4096.0).epsilon(1e-14));
    for (size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
    GridAxis lin_axis{0.5, 2.0, 16, false, false};
    auto u = axis_values(lin_axis);
    CHECK(u.front() == 0.5);
    CHECK(u.back() == 2.0);
    GridAxis fixed_axis{3.0, 0.0, 0, false, true};
    CHECK(axis_values(fixed_axis) == std::vector<double>{3.0});
    CHECK_THROWS_AS(axis_values(GridAxis{1.0, 2.0, 8, true, false}), config_error);
    CHECK_THROWS_AS(axis_values(GridAxis{-1.0, 2.0, 16, true, false}), config_error);
}

TEST_CASE("constrained power minimum beats an exhaustive grid oracle") {
    SerModel model;
    model.kind = SerKind::UnionBoundOrthogonal;
    SearchDomain domain;
    domain.m_set = {2, 4};
    domain.amplitude = {0.5, 2.0, 17, false, false};
    domain.signal_base = {1.0, 64.0, 17, true, false};
    const double floor = 0.3;
    ExtremumResult r = minimize_power(domain, floor, model);

    double oracle = 1e300;
    for (int m : domain.m_set)
        for (double g : axis_values(domain.amplitude))
            for (double base : axis_values(domain.signal_base)) {
                InvariantPoint p{m, g, base};
                if (icse(p, model) < floor) continue;
                oracle = std::min(oracle, icpe(p, model));
            }
    CHECK(r.icpe_value <= oracle + 1e-12);
    CHECK(r.icse_value >= floor * (1.0 - 1e-9));
    CHECK(r.value == r.icpe_value);
    // The reported value is the criterion at the reported point.
    CHECK(icpe(r.point, model) == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("unconstrained minimum is stable under grid doubling") {
    SerModel model;
    SearchDomain coarse;
    coarse.m_set = {2};
    coarse.amplitude = {0.1, 10.0, 17, true, false};
    coarse.signal_base = {1e-3, 65536.0, 33, true, false};
    SearchDomain fine = coarse;
    fine.amplitude.points = 33;
    fine.signal_base.points = 65;
    double w1 = minimize_power(coarse, 0.0, model).value;
    double w2 = minimize_power(fine, 0.0, model).value;
    CHECK(std::abs(w1 - w2) / w2 < 0.01);
}

TEST_CASE("power minimum ignores the amplitude window") {
    SerModel model;
    SearchDomain low;
    low.m_set = {2};
    low.amplitude = {0.1, 0.2, 17, true, false};
    low.signal_base = {1e-3, 65536.0, 129, true, false};
    SearchDomain high = low;
    high.amplitude = {2.0, 4.0, 17, true, false};
    double w_low = minimize_power(low, 0.0, model).value;
    double w_high = minimize_power(high, 0.0, model).value;
    CHECK(std::abs(w_low - w_high) / w_high < 0.01);
}

TEST_CASE("floor above the capacity ceiling is infeasible") {
    SerModel model;
    SearchDomain domain;
    domain.m_set = {2, 4};
    domain.amplitude = {0.5, 2.0, 17, true, false};
    domain.signal_base = {2.0, 1024.0, 17, true, false};
    // ceiling: log2(4) / (2/2) = 2 bits/s/Hz
    bool thrown = false;
    try {
        minimize_power(domain, 20.0, model);
    } catch (const infeasible_error& e) {
        thrown = true;
        CHECK(e.objective < 20.0);
        CHECK(e.objective > 0.0);
        CHECK((e.alphabet_size == 2 || e.alphabet_size == 4));
        CHECK(e.signal_base >= 2.0);
    }
    CHECK(thrown);
}

TEST_CASE("results are bit-identical across repeat runs") {
    SerModel model;
    SearchDomain domain;
    domain.m_set = {2, 4, 8};
    domain.amplitude = {0.25, 4.0, 17, true, false};
    domain.signal_base = {0.25, 4096.0, 33, true, false};
    ExtremumResult a = minimize_power(domain, 0.25, model);
    ExtremumResult b = minimize_power(domain, 0.25, model);
    CHECK(a.value == b.value);
    CHECK(a.point.signal_base == b.point.signal_base);
    CHECK(a.point.amplitude == b.point.amplitude);
    CHECK(a.point.alphabet_size == b.point.alphabet_size);
}

TEST_CASE("spectral maximum under the near-minimal-power band") {
    SerModel model;
    SearchDomain domain;
    domain.m_set = {2, 4, 16};
    domain.amplitude = {1.0, 0.0, 0, false, true};
    domain.signal_base = {0.25, 65536.0, 129, true, false};
    ExtremumResult r = maximize_spectral(domain, model, 0.02);
    CHECK(r.point.alphabet_size == 16);
    CHECK(r.interior);
    CHECK(r.band_lo > domain.signal_base.lo);
    CHECK(r.band_hi < domain.signal_base.hi);
    CHECK(r.band_lo < r.point.signal_base);
    CHECK(r.band_hi > r.point.signal_base);
    // icse * icpe == g^2 at any point, and the band edges sit at the slack.
    CHECK(r.icse_value * r.icpe_value == doctest::Approx(1.0).epsilon(1e-12));
    InvariantPoint lo_edge{16, 1.0, r.band_lo};
    InvariantPoint hi_edge{16, 1.0, r.band_hi};
    CHECK(icse(lo_edge, model) == doctest::Approx(r.value / 1.02).epsilon(1e-6));
    CHECK(icse(hi_edge, model) == doctest::Approx(r.value / 1.02).epsilon(1e-6));
    // Soundness: no nearby base improves the criterion.
    for (double f : {0.99, 0.999, 1.001, 1.01}) {
        InvariantPoint near{16, 1.0, r.point.signal_base * f};
        CHECK(icse(near, model) <= r.value * (1.0 + 1e-9));
    }
}

TEST_CASE("spectral maximization validates its configuration") {
    SerModel model;
    SearchDomain domain;
    domain.m_set = {4};
    domain.amplitude = {0.5, 2.0, 17, true, false};
    domain.signal_base = {2.0, 1024.0, 33, true, false};
    CHECK_THROWS_AS(maximize_spectral(domain, model, 0.02), config_error);
    domain.amplitude = {1.0, 0.0, 0, false, true};
    CHECK_THROWS_AS(maximize_spectral(domain, model, 0.0), config_error);
    CHECK_THROWS_AS(maximize_spectral(domain, model, -0.5), config_error);
}

TEST_CASE("per-alphabet power constant across amplitudes") {
    SerModel model;
    auto rep2 = verify_power_constant(2, {0.25, 0.5, 1.0, 2.0, 4.0}, model);
    CHECK(rep2.relative_spread < 0.05);
    REQUIRE(rep2.minima.size() == 5);
    // The binary constant approaches pi*ln(2) from above.
    for (double w : rep2.minima) {
        CHECK(w > 3.14159265358979 * std::log(2.0) - 1e-6);
        CHECK(w < 3.14159265358979 * std::log(2.0) * 1.05);
    }
    auto rep16 = verify_power_constant(16, {0.25, 0.5, 1.0, 2.0, 4.0}, model);
    CHECK(rep16.relative_spread < 0.05);
    double c2 = rep2.minima[2], c16 = rep16.minima[2];
    CHECK(std::abs(c2 - c16) / c16 > 0.10);

    auto same = verify_power_constant(2, {1.0, 1.0, 1.0}, model);
    CHECK(same.relative_spread == 0.0);
    CHECK_THROWS_AS(verify_power_constant(2, {1.0, 2.0}, model), config_error);
}

TEST_CASE("optimal base grows as the channel degrades") {
    SerModel model;
    GridAxis base_axis{0.25, 65536.0, 129, true, false};
    TrendReport rep = optimal_complexity_trend({2.0, 1.0, 0.5}, {4, 8, 16}, model, base_axis, 0.02);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.base_strictly_increasing);
    for (const auto& row : rep.rows) CHECK(row.interior);
    // Halving the amplitude quadruples the optimal base.
    CHECK(rep.rows[1].signal_base / rep.rows[0].signal_base == doctest::Approx(4.0).epsilon(0.15));
    CHECK(rep.rows[2].signal_base / rep.rows[1].signal_base == doctest::Approx(4.0).epsilon(0.15));
    // The peak spectral efficiency scales with the power budget.
    double r0 = rep.rows[0].icse_value / (2.0 * 2.0);
    double r1 = rep.rows[1].icse_value / (1.0 * 1.0);
    double r2 = rep.rows[2].icse_value / (0.5 * 0.5);
    CHECK(r1 == doctest::Approx(r0).epsilon(0.01));
    CHECK(r2 == doctest::Approx(r0).epsilon(0.01));
}

TEST_CASE("a coupling-free error model degenerates the trend") {
    SerModel model;
    model.kind = SerKind::Constant;
    model.constant_p = 0.01;
    GridAxis base_axis{2.0, 4096.0, 33, true, false};
    TrendReport rep = optimal_complexity_trend({2.0, 1.0, 0.5}, {4, 8, 16}, model, base_axis, 0.02);
    CHECK_FALSE(rep.base_strictly_increasing);
    for (const auto& row : rep.rows) {
        CHECK(row.signal_base == 2.0);
        CHECK_FALSE(row.interior);
    }
    CHECK_THROWS_AS(
        optimal_complexity_trend({1.0, 2.0}, {4, 8, 16}, model, base_axis, 0.02),
        config_error);
    CHECK_THROWS_AS(optimal_complexity_trend({2.0, 1.0}, {4, 8}, model, base_axis, 0.02),
                    config_error);
}

} // TEST_SUITE

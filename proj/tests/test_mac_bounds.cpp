#include "doctest.h"

#include <cmath>

#include "radiolim/channel.hpp"
#include "radiolim/errors.hpp"
#include "radiolim/mac_bounds.hpp"

using namespace radiolim;

TEST_SUITE("mac_bounds") {

TEST_CASE("geometric duration entropy") {
    CHECK(geometric_entropy(1.0) == 0.0);
    CHECK(geometric_entropy(2.0) == doctest::Approx(2.0).epsilon(1e-14));
    // Direct series oracle at mean 4: sum over k of -p(k) log2 p(k),
    // p(k) = p (1-p)^(k-1).
    double p = 0.25;
    double h = 0.0;
    for (int k = 1; k < 4000; ++k) {
        double pk = p * std::pow(1.0 - p, k - 1);
        if (pk < 1e-280) break;
        h -= pk * std::log2(pk);
    }
    CHECK(geometric_entropy(4.0) == doctest::Approx(h).epsilon(1e-10));
    CHECK(geometric_entropy(64.0) > geometric_entropy(8.0));
    CHECK_THROWS_AS(geometric_entropy(0.5), domain_error);
}

TEST_CASE("queue-model overhead floors at zero entropy") {
    CHECK(overhead_infimum_mm1(0.0) == 2.0);
    CHECK(overhead_infimum_md1(0.0) == doctest::Approx(1.854));
    CHECK(overhead_infimum_mm1n(0.0, 1) == doctest::Approx(2.0 * (1.0 + 0.25) / 2.0));
    CHECK(overhead_infimum_mm1n(0.0, 13) == doctest::Approx(2.0 * (13.0 + std::exp2(-14.0)) / 14.0));
}

TEST_CASE("finite-buffer floor climbs toward the infinite-buffer floor") {
    double prev = 0.0;
    for (long n : {1l, 2l, 5l, 13l, 100l, 100000l}) {
        double v = overhead_infimum_mm1n(1.5, n);
        CHECK(v > prev);
        CHECK(v < overhead_infimum_mm1(1.5));
        prev = v;
    }
    CHECK(overhead_infimum_mm1n(1.5, 100000000l) ==
          doctest::Approx(overhead_infimum_mm1(1.5)).epsilon(1e-7));
}

TEST_CASE("deterministic-service floor undercuts the finite buffer only for deep buffers") {
    // The three families order md1 < mm1n < mm1 once the buffer holds 13 or
    // more packets; shallow buffers actually sit below the deterministic
    // floor, with the crossover between 12 and 13.
    CHECK(overhead_infimum_mm1n(0.0, 12) < overhead_infimum_md1(0.0));
    CHECK(overhead_infimum_mm1n(0.0, 13) > overhead_infimum_md1(0.0));
    for (long n : {13l, 50l, 1000l, 1000000l}) {
        CHECK(overhead_infimum_md1(2.0) < overhead_infimum_mm1n(2.0, n));
        CHECK(overhead_infimum_mm1n(2.0, n) < overhead_infimum_mm1(2.0));
    }
}

TEST_CASE("capacity ceiling from relative overhead") {
    CHECK(capacity_upper(0.0) == 1.0);
    CHECK(capacity_upper(0.25) == 0.8);
    CHECK_THROWS_AS(capacity_upper(-0.1), domain_error);
}

TEST_CASE("capacity ceiling with channel errors") {
    CHECK(capacity_upper_with_errors(1.0, 0.0, 1000.0) == 1.0);
    CHECK(capacity_upper_with_errors(0.8, 4.0, 1000.0) ==
          doctest::Approx(0.8 / (1.0 + 4.0 / 800.0)).epsilon(1e-15));
    // Reduces to the clean ceiling when the channel is clean.
    CHECK(capacity_upper_with_errors(1.0, 250.0, 1000.0) ==
          doctest::Approx(capacity_upper(0.25)).epsilon(1e-15));
    CHECK_THROWS_AS(capacity_upper_with_errors(0.0, 1.0, 10.0), domain_error);
    CHECK_THROWS_AS(capacity_upper_with_errors(1.5, 1.0, 10.0), domain_error);
}

TEST_CASE("symbol rate efficiency from the error probability") {
    CHECK(symbol_rate_efficiency(2, 0.0) == 1.0);
    double p = 0.11;
    double hb = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
    CHECK(symbol_rate_efficiency(2, p) == doctest::Approx(1.0 - hb).epsilon(1e-13));
    CHECK(symbol_rate_efficiency(16, 0.01) ==
          doctest::Approx(mary_capacity(16, 0.01) / 4.0).epsilon(1e-15));
    CHECK(std::abs(symbol_rate_efficiency(4, 0.75)) < 1e-12);
}

} // TEST_SUITE

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace radiolim {

// Mixes a base seed and a stream index into an independent 64-bit seed.
// Used to give every Monte Carlo trial its own generator so results do not
// depend on how trials are scheduled across threads.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Per-trial random stream. Draw order is part of every caller's contract:
// given the same seed and the same sequence of calls, the values are
// bit-identical on every platform with IEEE doubles.
class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::uint64_t stream) : gen_(mix_seed(seed, stream)) {}

    // Uniform on [0, 1) from the high 53 bits of one 64-bit draw.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller, always two uniforms per call.
    // No cached spare: keeps the draw count per call constant.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Uniform integer on [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return v % n;
    }

    // Poisson count by Knuth's product method; fine for the small means used here.
    long poisson(double mean) {
        if (mean <= 0.0) return 0;
        double limit = std::exp(-mean);
        long k = 0;
        double prod = uniform01();
        while (prod > limit) {
            ++k;
            prod *= uniform01();
        }
        return k;
    }

    // Geometric on {1, 2, ...} with the given mean (success prob 1/mean).
    long geometric(double mean) {
        if (mean <= 1.0) return 1;
        double p = 1.0 / mean;
        double u = uniform01();
        while (u <= 0.0) u = uniform01();
        return 1 + static_cast<long>(std::floor(std::log(u) / std::log1p(-p)));
    }

    std::mt19937_64& raw() { return gen_; }

  private:
    std::mt19937_64 gen_;
};

} // namespace radiolim

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace faasim {

// Deterministic random source. Wraps mt19937_64 with hand-rolled draw
// helpers so sampled values are identical across standard libraries
// (std::uniform_*_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, bound). Lemire's multiply-shift with rejection.
    std::uint64_t uniform_u64(std::uint64_t bound) {
        if (bound == 0) return 0;
        while (true) {
            std::uint64_t x = gen_();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (0 - bound) % bound)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // Exponential with the given mean (inverse transform).
    double exponential(double mean) { return -mean * std::log1p(-uniform01()); }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace faasim

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sinr/errors.hpp"

namespace sinr {

// Deterministic 64-bit generator. mt19937_64 output is pinned by the
// standard; bounded and real-valued draws are derived here by hand because
// std::uniform_*_distribution is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n), rejection-sampled so the result is exactly uniform.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw InputError("Rng::below: n must be positive");
        const std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % n;
        const std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() - rem;
        std::uint64_t r = next();
        while (r >= bound) r = next();
        return r % n;
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Standard normal via Box-Muller (second value discarded).
    double gaussian() {
        double u1 = unit();
        while (u1 == 0.0) u1 = unit();
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace sinr

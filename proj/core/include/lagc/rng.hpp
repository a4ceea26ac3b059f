#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace lagc {

// Gaussian source on top of mt19937_64. std::normal_distribution is
// implementation-defined, so Box-Muller is rolled by hand to keep seeded
// streams stable across standard libraries.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

    double uniform() {
        // 53-bit mantissa in (0, 1]
        return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace lagc

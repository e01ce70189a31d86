#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace wigner {

// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// One independent random stream.  Stream k of a master seed is obtained by
// mixing (seed, k) into the initial state, so trial-level streams are
// reproducible and independent of how trials are scheduled across workers.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix64(seed + kGolden)) {}

    RngStream(std::uint64_t seed, std::uint64_t stream)
        : state_(mix64(mix64(seed + kGolden) ^ (kGolden * (stream + 1)))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += kGolden);
        return mix64(z);
    }

    // Uniform on (0,1): 53 random mantissa bits, zero excluded.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via the polar (Marsaglia) variant of Box-Muller.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_unit() - 1.0;
            v = 2.0 * next_unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Standard complex normal: E[z]=0, E[|z|^2]=1, E[z^2]=0.
    std::complex<double> next_complex_gaussian() {
        constexpr double inv_sqrt2 = 0.70710678118654752440;
        double re = next_gaussian();
        double im = next_gaussian();
        return {re * inv_sqrt2, im * inv_sqrt2};
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wigner

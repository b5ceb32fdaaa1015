#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace imag {

// Mixes a base seed and a stream index into a fresh seed (splitmix64 step).
// Used to derive independent, reproducible substreams for audit trials.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seeded deterministic generator. Normal variates come from an explicit
// Box-Muller transform so that the draw sequence is identical across
// platforms for a fixed seed (std::normal_distribution is
// implementation-defined and would break the bitwise determinism contract).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream) : engine_(derive_seed(seed, stream)) {}

    // Uniform in [0, 1).
    double uniform() {
        // 53 random bits -> double in [0,1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        // n is tiny in this codebase; modulo bias is negligible for n << 2^64
        return engine_() % n;
    }

    // Raw 64-bit draw, for deriving child seeds.
    std::uint64_t next_seed() { return engine_(); }

    // Standard normal N(0, 1).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Complex Gaussian with independent N(0,1) real and imaginary parts.
    std::complex<double> complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace imag

#include "stokes2p/rng.hpp"

#include <cmath>
#include <numbers>

#include "stokes2p/errors.hpp"

namespace stokes2p {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ mix64(index + 1));
}

double RngStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

std::complex<double> RngStream::complex_normal() {
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

double RngStream::exponential() { return -std::log(uniform_open()); }

namespace {

// product-of-uniforms method, exact for small means
std::int64_t poisson_small(RngStream& rng, double mean) {
    const double threshold = std::exp(-mean);
    std::int64_t k = 0;
    double prod = 1.0;
    while (true) {
        prod *= rng.uniform();
        if (prod > threshold) {
            ++k;
        } else {
            return k;
        }
    }
}

// Hoermann's transformed rejection with squeeze (PTRS), exact for mean >= 10
std::int64_t poisson_ptrs(RngStream& rng, double mean) {
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);

    while (true) {
        const double u = rng.uniform() - 0.5;
        double v = rng.uniform();
        const double us = 0.5 - std::fabs(u);
        const auto k =
            static_cast<std::int64_t>(std::floor((2.0 * a / us + b) * u + mean + 0.43));
        if (us >= 0.07 && v <= vr) {
            return k;
        }
        if (k < 0 || (us < 0.013 && v > us)) {
            continue;
        }
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            -mean + static_cast<double>(k) * loglam -
                std::lgamma(static_cast<double>(k) + 1.0)) {
            return k;
        }
    }
}

}  // namespace

std::int64_t RngStream::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw Error(errcat::argument, "Poisson mean must be finite and nonnegative");
    }
    if (mean == 0.0) return 0;
    if (mean < 10.0) return poisson_small(*this, mean);
    return poisson_ptrs(*this, mean);
}

}  // namespace stokes2p

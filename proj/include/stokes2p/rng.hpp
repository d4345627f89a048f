#pragma once

// Deterministic random streams. Everything stochastic in this library takes
// an explicit 64-bit seed, and all samplers are spelled out here instead of
// using std::<distribution>, whose output is implementation-defined. Given a
// seed, the draw sequence is fixed by mt19937_64 plus the algorithms below.

#include <complex>
#include <cstdint>
#include <random>

namespace stokes2p {

// splitmix64 finalizer, used to derive independent substream seeds.
std::uint64_t mix64(std::uint64_t z);

// Seed for the index-th substream of a base seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    static RngStream substream(std::uint64_t seed, std::uint64_t index) {
        return RngStream(substream_seed(seed, index));
    }

    // uniform double in [0,1), 53-bit resolution
    double uniform();
    // uniform double in (0,1]
    double uniform_open();

    // standard normal pair packed as a complex number (Box-Muller)
    std::complex<double> complex_normal();

    // exponential with mean 1
    double exponential();

    // Poisson with the given mean; inversion below mean 10, transformed
    // rejection (PTRS) above
    std::int64_t poisson(double mean);

private:
    std::mt19937_64 engine_;
};

}  // namespace stokes2p

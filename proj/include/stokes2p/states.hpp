#pragma once

// Constructors for the photon-pair state families: product pure states,
// the four maximally entangled states, Werner mixtures, two-term product
// mixtures, general convex mixtures, and seeded random ensembles.

#include <cstdint>
#include <utility>
#include <vector>

#include "stokes2p/complex_matrix.hpp"
#include "stokes2p/rng.hpp"

namespace stokes2p {

// One-photon pure polarization state, normalized on construction.
struct JonesVector {
    complexd h;
    complexd v;

    JonesVector(complexd h_in, complexd v_in);

    static JonesVector horizontal() { return {1.0, 0.0}; }
    static JonesVector vertical() { return {0.0, 1.0}; }
    static JonesVector diagonal() { return {1.0, 1.0}; }       // +45 deg
    static JonesVector antidiagonal() { return {1.0, -1.0}; }  // 135 deg
    static JonesVector left_circular() { return {1.0, complexd(0.0, 1.0)}; }
    static JonesVector right_circular() { return {1.0, complexd(0.0, -1.0)}; }

    JonesVector orthogonal() const { return {-std::conj(v), std::conj(h)}; }

    ComplexMatrix projector() const;  // |j><j|
};

// A validated 4x4 polarization density matrix.
class TwoPhotonState {
public:
    explicit TwoPhotonState(ComplexMatrix rho);

    const ComplexMatrix& rho() const noexcept { return rho_; }
    double purity() const;  // Tr(rho^2)

private:
    ComplexMatrix rho_;
};

enum class RandomKind { haar_pure, ginibre_mixed, product_mixture };

struct RandomSpec {
    RandomKind kind = RandomKind::ginibre_mixed;
    int rank = 4;       // ginibre only, 1..4
    int terms = 1;      // product-mixture only, >= 1
    std::uint64_t seed = 0;
};

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

TwoPhotonState product_pure(const JonesVector& a, const JonesVector& b);
TwoPhotonState bell(BellKind kind);

// lambda * psi + (1-lambda) * I4/4; psi must be pure to 1e-9
TwoPhotonState werner(const TwoPhotonState& psi, double lambda);

// lambda * |a><a| x |b><b|  +  (1-lambda) * |c><c| x |d><d|
TwoPhotonState two_product_mixture(const JonesVector& a, const JonesVector& b,
                                   const JonesVector& c, const JonesVector& d,
                                   double lambda);

TwoPhotonState convex_mix(const std::vector<std::pair<double, TwoPhotonState>>& terms);

TwoPhotonState random_state(const RandomSpec& spec);

// Haar-like random pure polarization (normalized complex Gaussian pair).
JonesVector random_jones(RngStream& rng);

}  // namespace stokes2p

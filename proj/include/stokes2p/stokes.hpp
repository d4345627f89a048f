#pragma once

// The Pauli/Stokes transform layer: one- and two-photon Stokes parameters,
// their inverses, and reduced (single-photon) Stokes vectors.
//
// Convention, fixed once for the whole library:
//   sigma_0 = I, sigma_1 = diag(1,-1)      (H/V population difference)
//   sigma_2 = [[0,1],[1,0]]                (+-45 deg linear)
//   sigma_3 = [[0,-i],[i,0]]               (circular),
// with |L> = (|H> + i|V>)/sqrt(2), so the L analyzer is (sigma_0+sigma_3)/2
// and R is (sigma_0-sigma_3)/2.

#include <array>

#include "stokes2p/complex_matrix.hpp"
#include "stokes2p/states.hpp"

namespace stokes2p {

struct StokesVector {
    std::array<double, 4> s{};

    double& operator[](int j) { return s[j]; }
    const double& operator[](int j) const { return s[j]; }
};

struct StokesTensor {
    std::array<std::array<double, 4>, 4> s{};

    double& operator()(int i, int j) { return s[i][j]; }
    const double& operator()(int i, int j) const { return s[i][j]; }
};

// Pauli matrices (cached immutable constants).
const ComplexMatrix& pauli(int j);
const ComplexMatrix& two_photon_pauli(int i, int j);  // sigma_i x sigma_j

// S_j = Tr(rho sigma_j). Validates rho as a density matrix unless told not to.
StokesVector stokes_from_density1(const ComplexMatrix& rho1, bool validate = true);

// rho = (1/2) sum_j S_j sigma_j; requires S_0 = 1. Positivity is the
// caller's concern (check with validate_density).
ComplexMatrix density_from_stokes1(const StokesVector& s);

StokesTensor stokes_from_density2(const TwoPhotonState& rho12);
StokesTensor stokes_from_density2(const ComplexMatrix& rho12, bool validate = true);

// rho = (1/4) sum_ij S_ij sigma_ij, total on any S_00 = 1 tensor. A noisy
// tensor need not be physical, so the reconstruction carries its report.
struct DensityReconstruction {
    ComplexMatrix rho;
    DensityReport report;
};
DensityReconstruction density_from_stokes2(const StokesTensor& S);

// Same, but throws unless the result is a valid density matrix.
TwoPhotonState state_from_stokes2(const StokesTensor& S);

// Single-photon Stokes vector of photon 1 (column 0) or photon 2 (row 0).
StokesVector reduced_stokes(const StokesTensor& S, int which);

}  // namespace stokes2p

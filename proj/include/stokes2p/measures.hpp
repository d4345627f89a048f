#pragma once

// Scalar polarization measures: the one-photon degrees of polarization, the
// signed square of the two-photon degree, its mixedness companion, purity,
// and the pure/product/entangled classification.

#include "stokes2p/stokes.hpp"

namespace stokes2p {

struct MeasureSet {
    double p1 = 0.0;             // photon-1 degree of polarization
    double p2 = 0.0;             // photon-2 degree of polarization
    double pbar_sq = 0.0;        // (p1^2 + p2^2)/2
    double p12_sq_signed = 0.0;  // (sum_{i,j>=1} S_ij^2 - 1)/2, negative for many mixed states
    double p12 = 0.0;            // sqrt(max(0, p12_sq_signed))
    double pm = 0.0;             // sqrt(max(0, -p12_sq_signed))
    double purity = 0.0;         // (1/4) sum_ij S_ij^2
};

struct StateClass {
    bool is_pure = false;
    bool is_product_pure = false;
    bool is_max_entangled = false;
    bool witness_entangled = false;  // sufficient, not necessary
    double tol = 0.0;
};

inline constexpr double kClassifyTol = 1e-8;

// P = sqrt(S1^2 + S2^2 + S3^2); requires S0 = 1.
double degree_of_polarization(const StokesVector& s);

MeasureSet two_photon_measures(const StokesTensor& S);

StateClass classify(const StokesTensor& S, double tol = kClassifyTol);

}  // namespace stokes2p

#include "stokes2p/measures.hpp"

#include <cmath>
#include <sstream>

namespace stokes2p {

namespace {

void require_normalized(double s00) {
    if (std::abs(s00 - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "tensor component S_00 must be 1, got " << s00;
        throw Error(errcat::normalization, os.str());
    }
}

double marginal_sq_photon1(const StokesTensor& S) {
    return S(1, 0) * S(1, 0) + S(2, 0) * S(2, 0) + S(3, 0) * S(3, 0);
}

double marginal_sq_photon2(const StokesTensor& S) {
    return S(0, 1) * S(0, 1) + S(0, 2) * S(0, 2) + S(0, 3) * S(0, 3);
}

double correlation_sq(const StokesTensor& S) {
    double sum = 0.0;
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) sum += S(i, j) * S(i, j);
    return sum;
}

}  // namespace

double degree_of_polarization(const StokesVector& s) {
    if (std::abs(s[0] - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "Stokes component S_0 must be 1, got " << s[0];
        throw Error(errcat::normalization, os.str());
    }
    return std::sqrt(s[1] * s[1] + s[2] * s[2] + s[3] * s[3]);
}

MeasureSet two_photon_measures(const StokesTensor& S) {
    require_normalized(S(0, 0));
    MeasureSet m;
    const double m1 = marginal_sq_photon1(S);
    const double m2 = marginal_sq_photon2(S);
    m.p1 = std::sqrt(m1);
    m.p2 = std::sqrt(m2);
    m.pbar_sq = 0.5 * (m1 + m2);
    m.p12_sq_signed = 0.5 * (correlation_sq(S) - 1.0);
    m.p12 = std::sqrt(std::max(0.0, m.p12_sq_signed));
    m.pm = std::sqrt(std::max(0.0, -m.p12_sq_signed));
    double total = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) total += S(i, j) * S(i, j);
    m.purity = 0.25 * total;
    return m;
}

StateClass classify(const StokesTensor& S, double tol) {
    require_normalized(S(0, 0));
    StateClass cls;
    cls.tol = tol;

    const double m1 = marginal_sq_photon1(S);
    const double m2 = marginal_sq_photon2(S);
    const double corr = correlation_sq(S);
    double total = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) total += S(i, j) * S(i, j);
    const double purity = 0.25 * total;

    cls.is_pure = std::abs(purity - 1.0) <= tol;
    cls.is_product_pure = cls.is_pure && std::abs(m1 - 1.0) <= tol &&
                          std::abs(m2 - 1.0) <= tol && std::abs(corr - 1.0) <= tol;

    bool marginals_zero = true;
    for (int k = 1; k < 4; ++k) {
        if (std::abs(S(k, 0)) > tol || std::abs(S(0, k)) > tol) marginals_zero = false;
    }
    cls.is_max_entangled = cls.is_pure && marginals_zero && std::abs(corr - 3.0) <= tol;

    cls.witness_entangled = 0.5 * (corr - 1.0) > tol;
    return cls;
}

}  // namespace stokes2p

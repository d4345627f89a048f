#include "stokes2p/states.hpp"

#include <cmath>
#include <sstream>

namespace stokes2p {

JonesVector::JonesVector(complexd h_in, complexd v_in) : h(h_in), v(v_in) {
    const double n2 = std::norm(h) + std::norm(v);
    if (n2 < 1e-24) {
        throw Error(errcat::degenerate_state, "Jones vector has (near-)zero norm");
    }
    const double n = std::sqrt(n2);
    h /= n;
    v /= n;
}

ComplexMatrix JonesVector::projector() const {
    ComplexMatrix m(2);
    m(0, 0) = h * std::conj(h);
    m(0, 1) = h * std::conj(v);
    m(1, 0) = v * std::conj(h);
    m(1, 1) = v * std::conj(v);
    return m;
}

TwoPhotonState::TwoPhotonState(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (rho_.dim() != 4) {
        throw Error(errcat::invalid_dimension, "two-photon state must be 4x4");
    }
    const DensityReport report = validate_density(rho_);
    if (!report.is_valid) {
        throw Error(errcat::validation,
                    "not a valid density matrix: " + report.describe_failures());
    }
}

double TwoPhotonState::purity() const {
    // Tr(rho^2) of a Hermitian matrix is the squared Frobenius norm
    double p = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) p += std::norm(rho_(r, c));
    return p;
}

TwoPhotonState product_pure(const JonesVector& a, const JonesVector& b) {
    return TwoPhotonState(tensor_product(a.projector(), b.projector()));
}

TwoPhotonState bell(BellKind kind) {
    // amplitude signs over |HH>,|HV>,|VH>,|VV>; the density entries are then
    // exactly +-1/2, free of the (1/sqrt 2)^2 rounding residue
    std::array<double, 4> sign{};
    switch (kind) {
        case BellKind::phi_plus: sign = {1.0, 0.0, 0.0, 1.0}; break;
        case BellKind::phi_minus: sign = {1.0, 0.0, 0.0, -1.0}; break;
        case BellKind::psi_plus: sign = {0.0, 1.0, 1.0, 0.0}; break;
        case BellKind::psi_minus: sign = {0.0, 1.0, -1.0, 0.0}; break;
    }
    ComplexMatrix rho(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho(i, j) = 0.5 * sign[i] * sign[j];
    return TwoPhotonState(rho);
}

TwoPhotonState werner(const TwoPhotonState& psi, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        std::ostringstream os;
        os << "werner weight must lie in [0,1], got " << lambda;
        throw Error(errcat::range, os.str());
    }
    if (psi.purity() < 1.0 - 1e-9) {
        std::ostringstream os;
        os << "werner expects a pure input state, purity " << psi.purity();
        throw Error(errcat::precondition, os.str());
    }
    ComplexMatrix rho = complexd(lambda) * psi.rho() +
                        complexd((1.0 - lambda) / 4.0) * ComplexMatrix::identity(4);
    return TwoPhotonState(rho);
}

TwoPhotonState two_product_mixture(const JonesVector& a, const JonesVector& b,
                                   const JonesVector& c, const JonesVector& d,
                                   double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        std::ostringstream os;
        os << "mixture weight must lie in [0,1], got " << lambda;
        throw Error(errcat::range, os.str());
    }
    ComplexMatrix rho =
        complexd(lambda) * tensor_product(a.projector(), b.projector()) +
        complexd(1.0 - lambda) * tensor_product(c.projector(), d.projector());
    return TwoPhotonState(rho);
}

TwoPhotonState convex_mix(const std::vector<std::pair<double, TwoPhotonState>>& terms) {
    if (terms.empty()) {
        throw Error(errcat::argument, "convex_mix needs at least one term");
    }
    double total = 0.0;
    for (const auto& [w, state] : terms) {
        if (w < 0.0) {
            throw Error(errcat::normalization, "mixture weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "mixture weights sum to " << total << ", expected 1";
        throw Error(errcat::normalization, os.str());
    }
    ComplexMatrix rho(4);
    for (const auto& [w, state] : terms) rho += complexd(w) * state.rho();
    return TwoPhotonState(rho);
}

JonesVector random_jones(RngStream& rng) {
    return {rng.complex_normal(), rng.complex_normal()};
}

namespace {

TwoPhotonState random_haar_pure(RngStream& rng) {
    std::array<complexd, 4> psi;
    double n2 = 0.0;
    for (auto& amp : psi) {
        amp = rng.complex_normal();
        n2 += std::norm(amp);
    }
    const double n = std::sqrt(n2);
    ComplexMatrix rho(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho(i, j) = psi[i] * std::conj(psi[j]) / (n * n);
    return TwoPhotonState(rho);
}

TwoPhotonState random_ginibre(RngStream& rng, int rank) {
    // rho = G G^dagger / Tr(G G^dagger) with G a 4 x rank complex Gaussian
    std::array<std::array<complexd, 4>, 4> g{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < rank; ++c) g[r][c] = rng.complex_normal();
    ComplexMatrix rho(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            complexd acc = 0.0;
            for (int k = 0; k < rank; ++k) acc += g[r][k] * std::conj(g[c][k]);
            rho(r, c) = acc;
        }
    const double tr = rho.trace().real();
    rho *= complexd(1.0 / tr);
    return TwoPhotonState(rho);
}

TwoPhotonState random_product_mixture(RngStream& rng, int terms) {
    // Dirichlet(1,...,1) weights via normalized exponentials
    std::vector<double> weights(terms);
    double total = 0.0;
    for (auto& w : weights) {
        w = rng.exponential();
        total += w;
    }
    ComplexMatrix rho(4);
    for (int t = 0; t < terms; ++t) {
        const JonesVector a = random_jones(rng);
        const JonesVector b = random_jones(rng);
        rho += complexd(weights[t] / total) *
               tensor_product(a.projector(), b.projector());
    }
    return TwoPhotonState(rho);
}

}  // namespace

TwoPhotonState random_state(const RandomSpec& spec) {
    if (spec.rank < 1 || spec.rank > 4) {
        throw Error(errcat::spec, "ginibre rank must lie in 1..4");
    }
    if (spec.terms < 1) {
        throw Error(errcat::spec, "product-mixture needs at least one term");
    }
    RngStream rng(spec.seed);
    switch (spec.kind) {
        case RandomKind::haar_pure: return random_haar_pure(rng);
        case RandomKind::ginibre_mixed: return random_ginibre(rng, spec.rank);
        case RandomKind::product_mixture: return random_product_mixture(rng, spec.terms);
    }
    throw Error(errcat::spec, "unknown random ensemble");
}

}  // namespace stokes2p

#include "stokes2p/stokes.hpp"

#include <cmath>
#include <sstream>

namespace stokes2p {

namespace {

constexpr double kImagResidueTol = 1e-10;

std::array<ComplexMatrix, 4> make_paulis() {
    ComplexMatrix s0 = ComplexMatrix::identity(2);
    ComplexMatrix s1(2), s2(2), s3(2);
    s1(0, 0) = 1.0;
    s1(1, 1) = -1.0;
    s2(0, 1) = 1.0;
    s2(1, 0) = 1.0;
    s3(0, 1) = complexd(0.0, -1.0);
    s3(1, 0) = complexd(0.0, 1.0);
    return {s0, s1, s2, s3};
}

// Tr(rho * sigma), with the imaginary residue asserted away.
double real_pauli_trace(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    complexd t = 0.0;
    for (int r = 0; r < rho.dim(); ++r)
        for (int c = 0; c < rho.dim(); ++c) t += rho(r, c) * sigma(c, r);
    if (std::abs(t.imag()) > kImagResidueTol) {
        std::ostringstream os;
        os << "Stokes parameter has imaginary residue " << t.imag()
           << "; input is not Hermitian";
        throw Error(errcat::non_hermitian, os.str());
    }
    return t.real();
}

void require_unit_component(double s00, const char* name) {
    if (std::abs(s00 - 1.0) > 1e-9) {
        std::ostringstream os;
        os << name << " must be 1, got " << s00;
        throw Error(errcat::normalization, os.str());
    }
}

}  // namespace

const ComplexMatrix& pauli(int j) {
    static const std::array<ComplexMatrix, 4> sigmas = make_paulis();
    if (j < 0 || j > 3) {
        throw Error(errcat::range, "Pauli index must lie in 0..3");
    }
    return sigmas[static_cast<std::size_t>(j)];
}

const ComplexMatrix& two_photon_pauli(int i, int j) {
    static const std::array<ComplexMatrix, 16> sigmas = [] {
        std::array<ComplexMatrix, 16> out{
            ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
            ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
            ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
            ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4)};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                out[static_cast<std::size_t>(4 * a + b)] =
                    tensor_product(pauli(a), pauli(b));
        return out;
    }();
    if (i < 0 || i > 3 || j < 0 || j > 3) {
        throw Error(errcat::range, "two-photon Pauli indices must lie in 0..3");
    }
    return sigmas[static_cast<std::size_t>(4 * i + j)];
}

StokesVector stokes_from_density1(const ComplexMatrix& rho1, bool validate) {
    if (rho1.dim() != 2) {
        throw Error(errcat::invalid_dimension, "one-photon density matrix must be 2x2");
    }
    if (validate) {
        const DensityReport report = validate_density(rho1);
        if (!report.is_valid) {
            throw Error(errcat::validation,
                        "not a valid density matrix: " + report.describe_failures());
        }
    }
    StokesVector out;
    for (int j = 0; j < 4; ++j) out[j] = real_pauli_trace(rho1, pauli(j));
    return out;
}

ComplexMatrix density_from_stokes1(const StokesVector& s) {
    require_unit_component(s[0], "S_0");
    ComplexMatrix rho(2);
    for (int j = 0; j < 4; ++j) rho += complexd(0.5 * s[j]) * pauli(j);
    return rho;
}

StokesTensor stokes_from_density2(const ComplexMatrix& rho12, bool validate) {
    if (rho12.dim() != 4) {
        throw Error(errcat::invalid_dimension, "two-photon density matrix must be 4x4");
    }
    if (validate) {
        const DensityReport report = validate_density(rho12);
        if (!report.is_valid) {
            throw Error(errcat::validation,
                        "not a valid density matrix: " + report.describe_failures());
        }
    }
    StokesTensor out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out(i, j) = real_pauli_trace(rho12, two_photon_pauli(i, j));
    return out;
}

StokesTensor stokes_from_density2(const TwoPhotonState& rho12) {
    return stokes_from_density2(rho12.rho(), /*validate=*/false);
}

DensityReconstruction density_from_stokes2(const StokesTensor& S) {
    require_unit_component(S(0, 0), "S_00");
    ComplexMatrix rho(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rho += complexd(0.25 * S(i, j)) * two_photon_pauli(i, j);
    return {rho, validate_density(rho)};
}

TwoPhotonState state_from_stokes2(const StokesTensor& S) {
    DensityReconstruction rec = density_from_stokes2(S);
    if (!rec.report.is_valid) {
        throw Error(errcat::validation, "tensor is not physical: " +
                                            rec.report.describe_failures());
    }
    return TwoPhotonState(std::move(rec.rho));
}

StokesVector reduced_stokes(const StokesTensor& S, int which) {
    StokesVector out;
    if (which == 1) {
        for (int i = 0; i < 4; ++i) out[i] = S(i, 0);
    } else if (which == 2) {
        for (int j = 0; j < 4; ++j) out[j] = S(0, j);
    } else {
        throw Error(errcat::argument, "photon id must be 1 or 2");
    }
    return out;
}

}  // namespace stokes2p

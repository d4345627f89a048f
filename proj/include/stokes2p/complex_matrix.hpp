#pragma once

// Dense complex matrices of dimension 2 or 4, just enough linear algebra
// for polarization density operators: arithmetic, Kronecker product,
// partial trace, Jacobi eigenvalues, density-matrix validation.

#include <array>
#include <complex>
#include <vector>

#include "stokes2p/errors.hpp"

namespace stokes2p {

using complexd = std::complex<double>;

// Default validation tolerances.
inline constexpr double kTolTrace = 1e-9;
inline constexpr double kTolHerm = 1e-9;
inline constexpr double kTolPsd = 1e-10;

class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);  // zero matrix, dim must be 2 or 4

    static ComplexMatrix identity(int dim);

    int dim() const noexcept { return dim_; }

    complexd& operator()(int r, int c) { return entries_[r * dim_ + c]; }
    const complexd& operator()(int r, int c) const { return entries_[r * dim_ + c]; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(complexd scalar);

    ComplexMatrix adjoint() const;
    complexd trace() const;

    // max |m_rc - conj(m_cr)| over all entries
    double hermiticity_deviation() const;

    double max_abs_diff(const ComplexMatrix& other) const;

private:
    int dim_;
    std::array<complexd, 16> entries_{};  // row-major, dim*dim used
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(complexd scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, complexd scalar);

// Kronecker product of two 2x2 matrices in basis order |HH>,|HV>,|VH>,|VV>
// (first factor is photon 1).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace out one photon of a 4x4 two-photon operator; keep is 1 or 2.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int keep);

// Eigenvalues of the Hermitian part (m + m^dagger)/2, ascending.
// Throws if m deviates from Hermitian by more than tol_herm.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double tol_herm = kTolHerm);

struct DensityReport {
    double trace_deviation = 0.0;
    double hermiticity_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool is_valid = false;

    std::string describe_failures(double tol_trace = kTolTrace,
                                  double tol_herm = kTolHerm,
                                  double tol_psd = kTolPsd) const;
};

// Always returns a report; never throws.
DensityReport validate_density(const ComplexMatrix& m,
                               double tol_trace = kTolTrace,
                               double tol_herm = kTolHerm,
                               double tol_psd = kTolPsd);

}  // namespace stokes2p

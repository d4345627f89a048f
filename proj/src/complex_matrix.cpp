#include "stokes2p/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace stokes2p {

namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 4) {
        throw Error(errcat::invalid_dimension,
                    "matrix dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw Error(errcat::invalid_dimension,
                    "dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    require_dim(dim);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other);
    for (int i = 0; i < dim_ * dim_; ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(*this, other);
    for (int i = 0; i < dim_ * dim_; ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd scalar) {
    for (int i = 0; i < dim_ * dim_; ++i) entries_[i] *= scalar;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
}

complexd ComplexMatrix::trace() const {
    complexd t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_deviation() const {
    double dev = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return dev;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require_same_dim(*this, other);
    double d = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            d = std::max(d, std::abs((*this)(r, c) - other(r, c)));
    return d;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw Error(errcat::invalid_dimension, "dimension mismatch in matrix product");
    }
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) {
            complexd acc = 0.0;
            for (int k = 0; k < a.dim(); ++k) acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    return out;
}

ComplexMatrix operator*(complexd scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, complexd scalar) { return m *= scalar; }

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw Error(errcat::invalid_dimension, "tensor_product expects two 2x2 factors");
    }
    ComplexMatrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int keep) {
    if (rho.dim() != 4) {
        throw Error(errcat::invalid_dimension, "partial_trace expects a 4x4 matrix");
    }
    if (keep != 1 && keep != 2) {
        throw Error(errcat::argument, "keep must be photon 1 or 2");
    }
    ComplexMatrix out(2);
    if (keep == 1) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                out(a, b) = rho(2 * a + 0, 2 * b + 0) + rho(2 * a + 1, 2 * b + 1);
    } else {
        for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d)
                out(c, d) = rho(0 + c, 0 + d) + rho(2 + c, 2 + d);
    }
    return out;
}

namespace {

// Cyclic Jacobi sweeps with complex Givens rotations on a Hermitian matrix.
// Off-diagonal Frobenius norm below 1e-13 counts as converged.
std::vector<double> jacobi_eigenvalues(ComplexMatrix a) {
    const int n = a.dim();
    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 100;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (r != c) s += std::norm(a(r, c));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_norm() < kOffTol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r < 1e-300) continue;
                const complexd phase = a(p, q) / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
                if (theta > std::numbers::pi / 4.0) theta -= std::numbers::pi / 2.0;
                const double c = std::cos(theta);
                const double s = std::sin(theta);

                // columns p,q:  col_p <- c*col_p + s*conj(phase)*col_q
                for (int k = 0; k < n; ++k) {
                    const complexd akp = a(k, p);
                    const complexd akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                }
                // rows p,q with the conjugate rotation
                for (int k = 0; k < n; ++k) {
                    const complexd apk = a(p, k);
                    const complexd aqk = a(q, k);
                    a(p, k) = c * apk + s * phase * aqk;
                    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                // clean up round-off drift on the target pair
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = complexd(a(p, p).real(), 0.0);
                a(q, q) = complexd(a(q, q).real(), 0.0);
            }
        }
    }
    if (off_norm() >= kOffTol) {
        throw Error(errcat::convergence, "Jacobi eigenvalue iteration did not converge");
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix h(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return h;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol_herm) {
    const double dev = m.hermiticity_deviation();
    if (dev > tol_herm) {
        std::ostringstream os;
        os << "matrix deviates from Hermitian by " << dev << " (tolerance " << tol_herm
           << ")";
        throw Error(errcat::non_hermitian, os.str());
    }
    return jacobi_eigenvalues(hermitian_part(m));
}

DensityReport validate_density(const ComplexMatrix& m, double tol_trace,
                               double tol_herm, double tol_psd) {
    DensityReport report;
    report.trace_deviation = std::abs(m.trace() - complexd(1.0));
    report.hermiticity_deviation = m.hermiticity_deviation();
    const auto eig = jacobi_eigenvalues(hermitian_part(m));
    report.min_eigenvalue = eig.front();
    report.is_valid = report.trace_deviation <= tol_trace &&
                      report.hermiticity_deviation <= tol_herm &&
                      report.min_eigenvalue >= -tol_psd;
    return report;
}

std::string DensityReport::describe_failures(double tol_trace, double tol_herm,
                                             double tol_psd) const {
    std::ostringstream os;
    bool first = true;
    auto add = [&](const std::string& s) {
        if (!first) os << ", ";
        os << s;
        first = false;
    };
    if (trace_deviation > tol_trace) {
        std::ostringstream f;
        f << "trace_deviation=" << trace_deviation << " > " << tol_trace;
        add(f.str());
    }
    if (hermiticity_deviation > tol_herm) {
        std::ostringstream f;
        f << "hermiticity_deviation=" << hermiticity_deviation << " > " << tol_herm;
        add(f.str());
    }
    if (min_eigenvalue < -tol_psd) {
        std::ostringstream f;
        f << "min_eigenvalue=" << min_eigenvalue << " < " << -tol_psd;
        add(f.str());
    }
    if (first) add("none");
    return os.str();
}

}  // namespace stokes2p

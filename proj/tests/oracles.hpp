#pragma once

// Independent reference computations for the test suites. Nothing here may
// call into the evaluators it is used to check.

#include <functional>

#include "opcalc/linalg.hpp"

namespace opcalc::testing {

/// sum_{i,j,k} f(l_i, m_j, n_k) P_i T Q_j R S_k with explicit rank-one
/// projections.
inline ComplexMatrix brute_force_triple(const std::function<Complex(double, double, double)>& f,
                                        const SpectralResolution& e1, const ComplexMatrix& t,
                                        const SpectralResolution& e2, const ComplexMatrix& r,
                                        const SpectralResolution& e3) {
    const Eigen::Index d = e1.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const ComplexMatrix p = e1.eigenvectors().col(i) * e1.eigenvectors().col(i).adjoint();
        for (Eigen::Index j = 0; j < d; ++j) {
            const ComplexMatrix q = e2.eigenvectors().col(j) * e2.eigenvectors().col(j).adjoint();
            const ComplexMatrix ptqr = p * t * q * r;
            for (Eigen::Index k = 0; k < d; ++k) {
                const ComplexMatrix s = e3.eigenvectors().col(k) * e3.eigenvectors().col(k).adjoint();
                out += f(e1.eigenvalues()(i), e2.eigenvalues()(j), e3.eigenvalues()(k)) * (ptqr * s);
            }
        }
    }
    return out;
}

/// sum_{j,k} f(l_j, m_k) P_j Q_k with explicit projections.
inline ComplexMatrix brute_force_double(const std::function<Complex(double, double)>& f, const SpectralResolution& a,
                                        const SpectralResolution& b) {
    const Eigen::Index d = a.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = 0; k < d; ++k)
            out += f(a.eigenvalues()(j), b.eigenvalues()(k)) *
                   (a.eigenvectors().col(j) * (a.eigenvectors().col(j).adjoint() * b.eigenvectors().col(k)) *
                    b.eigenvectors().col(k).adjoint());
    return out;
}

/// Matrix power series exponential exp(i s H), independent of any
/// eigendecomposition (scaling and squaring + Taylor).
inline ComplexMatrix expm_i(const ComplexMatrix& h, double s) {
    const Eigen::Index d = h.rows();
    ComplexMatrix x = Complex(0.0, s) * h;
    int squarings = 0;
    double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.25) {
        x /= 2.0;
        norm /= 2.0;
        ++squarings;
    }
    ComplexMatrix term = ComplexMatrix::Identity(d, d), sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * x / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

inline double rel_err(const ComplexMatrix& got, const ComplexMatrix& want) {
    return (got - want).norm() / (1.0 + want.norm());
}

}  // namespace opcalc::testing

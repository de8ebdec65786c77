#include "opcalc/linalg.hpp"

#include <cmath>
#include <cstdio>

namespace opcalc {

namespace {

std::string fingerprint(const ComplexMatrix& m) {
    Complex checksum = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            checksum += m(i, j) * double(1 + i + 7 * j);
    char buf[160];
    std::snprintf(buf, sizeof buf, "dim=%ld frob=%.17g checksum=(%.17g,%.17g)",
                  static_cast<long>(m.rows()), m.norm(), checksum.real(), checksum.imag());
    return buf;
}

}  // namespace

void require_square_finite(const ComplexMatrix& x, const char* what) {
    if (x.rows() != x.cols() || x.rows() == 0)
        throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
    if (!x.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
    require_square_finite(m, "HermitianMatrix");
    m_ = 0.5 * (m + m.adjoint());
    // Exact symmetry as stored: copy the upper triangle onto the lower and
    // make the diagonal real.
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        m_(i, i) = Complex(m_(i, i).real(), 0.0);
        for (Eigen::Index j = i + 1; j < m_.cols(); ++j) m_(j, i) = std::conj(m_(i, j));
    }
}

SpectralResolution::SpectralResolution(RealVector eigenvalues, ComplexMatrix eigenvectors)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
    if (vectors_.rows() != vectors_.cols() || vectors_.cols() != values_.size())
        throw std::invalid_argument("SpectralResolution: shape mismatch");
    for (Eigen::Index i = 1; i < values_.size(); ++i)
        if (values_(i) < values_(i - 1))
            throw std::invalid_argument("SpectralResolution: eigenvalues must be nondecreasing");
}

double SpectralResolution::spectral_radius() const {
    return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff();
}

ComplexMatrix SpectralResolution::reconstruct() const {
    return vectors_ * values_.cast<Complex>().asDiagonal() * vectors_.adjoint();
}

ComplexMatrix SpectralResolution::projection(Eigen::Index i) const {
    return vectors_.col(i) * vectors_.col(i).adjoint();
}

SpectralResolution eig_hermitian(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw EigensolverError("eig_hermitian: no convergence for " + fingerprint(h.matrix()));
    return SpectralResolution(solver.eigenvalues(), solver.eigenvectors());
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
        throw std::invalid_argument("commutator: dimension mismatch");
    return x * y - y * x;
}

double schatten_norm(const ComplexMatrix& x, SchattenIndex p) {
    if (x.size() == 0) return 0.0;
    if (p == SchattenIndex::two) return x.norm();
    Eigen::BDCSVD<ComplexMatrix> svd(x);
    const RealVector& s = svd.singularValues();
    return p == SchattenIndex::one ? s.sum() : s.maxCoeff();
}

Complex principal_trace(const ComplexMatrix& x, Eigen::Index n) {
    if (n < 1 || n > x.rows() || n > x.cols())
        throw std::invalid_argument("principal_trace: block size " + std::to_string(n) +
                                    " outside 1.." + std::to_string(x.rows()));
    return x.diagonal().head(n).sum();
}

}  // namespace opcalc

#pragma once

// Dense complex Hermitian linear algebra: spectral resolutions, commutators,
// Schatten norms and principal-submatrix traces.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace opcalc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Thrown when the Hermitian eigensolver fails to converge. The message
/// carries a fingerprint of the offending matrix (dimension, Frobenius norm,
/// entry checksum) so failures can be matched to inputs.
class EigensolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Self-adjoint matrix. Construction replaces the input by (X + X*)/2, so the
/// stored entries satisfy entry(i,j) == conj(entry(j,i)) exactly.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

private:
    ComplexMatrix m_;
};

/// Eigenvalues (ascending) and unitary eigenvector columns of a Hermitian
/// matrix. Each eigenvalue is paired with its own rank-one projection;
/// repeated eigenvalues are never merged into joint eigenspaces.
class SpectralResolution {
public:
    SpectralResolution(RealVector eigenvalues, ComplexMatrix eigenvectors);

    Eigen::Index dim() const { return values_.size(); }
    const RealVector& eigenvalues() const { return values_; }
    const ComplexMatrix& eigenvectors() const { return vectors_; }

    /// max |lambda|
    double spectral_radius() const;

    /// u(H) = U diag(u(lambda)) U*.
    template <class F>
    ComplexMatrix apply(F&& u) const {
        Eigen::VectorXcd d(dim());
        for (Eigen::Index i = 0; i < dim(); ++i) d(i) = Complex(u(values_(i)));
        return vectors_ * d.asDiagonal() * vectors_.adjoint();
    }

    /// U diag(lambda) U*
    ComplexMatrix reconstruct() const;

    /// Rank-one spectral projection onto eigenvector i.
    ComplexMatrix projection(Eigen::Index i) const;

private:
    RealVector values_;
    ComplexMatrix vectors_;
};

SpectralResolution eig_hermitian(const HermitianMatrix& h);

/// XY - YX; throws std::invalid_argument on dimension mismatch.
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

enum class SchattenIndex { one, two, op };

double schatten_norm(const ComplexMatrix& x, SchattenIndex p);

inline double trace_norm(const ComplexMatrix& x) { return schatten_norm(x, SchattenIndex::one); }
inline double op_norm(const ComplexMatrix& x) { return schatten_norm(x, SchattenIndex::op); }

/// Sum of the first n diagonal entries; throws if n exceeds the dimension.
Complex principal_trace(const ComplexMatrix& x, Eigen::Index n);

/// Throws std::invalid_argument unless x is square with finite entries.
void require_square_finite(const ComplexMatrix& x, const char* what);

}  // namespace opcalc

#pragma once

// Double operator integrals phi(A,B) = sum_{j,k} phi(lambda_j, mu_k) P_j Q_k
// and the Fourier-measure calculus sum w * exp(isA) exp(itB) used to
// cross-check them. Spectral projections of A always sit to the left of
// those of B.

#include <optional>
#include <vector>

#include "opcalc/function2d.hpp"
#include "opcalc/linalg.hpp"

namespace opcalc {

/// Thrown when an eigenvalue lies outside the declared radius of phi.
class SpectrumOutsideRadius : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Effective radius: `override_radius` if given, else phi's declared radius,
/// else 1 + max(spectral radius of A, spectral radius of B).
double effective_radius(const Function2D& phi, const SpectralResolution& a, const SpectralResolution& b,
                        std::optional<double> override_radius = std::nullopt);

/// phi sampled on the eigenvalue grid: F(j,k) = phi(lambda_j, mu_k).
ComplexMatrix sample_on_spectra(const Function2D& phi, const RealVector& lambda, const RealVector& mu);

/// U_A [F o (U_A* U_B)] U_B*, F(j,k) = phi(lambda_j, mu_k).
ComplexMatrix apply_doi(const Function2D& phi, const SpectralResolution& a, const SpectralResolution& b,
                        std::optional<double> radius = std::nullopt);

struct FourierAtom {
    double s;  // frequency paired with x (acts through A)
    double t;  // frequency paired with y (acts through B)
    Complex weight;
};

/// Finite atomic measure; phi(x,y) = sum w * exp(i(sx + ty)).
class FourierMeasure {
public:
    explicit FourierMeasure(std::vector<FourierAtom> atoms);

    const std::vector<FourierAtom>& atoms() const { return atoms_; }

    /// sum |w| (1+|s|)(1+|t|)
    double weighted_mass() const;

    /// The trigonometric sum as a Function2D with exact partials.
    Function2D as_function() const;

private:
    std::vector<FourierAtom> atoms_;
};

ComplexMatrix apply_fourier_calculus(const FourierMeasure& omega, const HermitianMatrix& a,
                                     const HermitianMatrix& b);

/// ||apply_doi(sum c_i phi_i) - sum c_i apply_doi(phi_i)||_op.
double check_linearity(const std::vector<Function2D>& phis, const std::vector<Complex>& coeffs,
                       const SpectralResolution& a, const SpectralResolution& b);

}  // namespace opcalc

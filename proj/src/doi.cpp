#include "opcalc/doi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace opcalc {

double effective_radius(const Function2D& phi, const SpectralResolution& a, const SpectralResolution& b,
                        std::optional<double> override_radius) {
    if (override_radius) return *override_radius;
    if (phi.radius()) return *phi.radius();
    return 1.0 + std::max(a.spectral_radius(), b.spectral_radius());
}

ComplexMatrix sample_on_spectra(const Function2D& phi, const RealVector& lambda, const RealVector& mu) {
    ComplexMatrix f(lambda.size(), mu.size());
    for (Eigen::Index k = 0; k < mu.size(); ++k)
        for (Eigen::Index j = 0; j < lambda.size(); ++j) f(j, k) = phi(lambda(j), mu(k));
    return f;
}

ComplexMatrix apply_doi(const Function2D& phi, const SpectralResolution& a, const SpectralResolution& b,
                        std::optional<double> radius) {
    if (a.dim() != b.dim()) throw std::invalid_argument("apply_doi: dimension mismatch");
    const double r = effective_radius(phi, a, b, radius);
    const double reach = std::max(a.spectral_radius(), b.spectral_radius());
    if (reach > r) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "apply_doi: spectrum reaches %.17g, outside radius %.17g of '%s'", reach, r,
                      phi.descriptor().c_str());
        throw SpectrumOutsideRadius(buf);
    }
    const ComplexMatrix overlap = a.eigenvectors().adjoint() * b.eigenvectors();
    const ComplexMatrix weighted =
        sample_on_spectra(phi, a.eigenvalues(), b.eigenvalues()).cwiseProduct(overlap);
    return a.eigenvectors() * weighted * b.eigenvectors().adjoint();
}

FourierMeasure::FourierMeasure(std::vector<FourierAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("FourierMeasure: needs at least one atom");
    for (const auto& a : atoms_)
        if (!std::isfinite(a.s) || !std::isfinite(a.t) || !std::isfinite(a.weight.real()) ||
            !std::isfinite(a.weight.imag()))
            throw std::invalid_argument("FourierMeasure: non-finite atom");
}

double FourierMeasure::weighted_mass() const {
    double m = 0.0;
    for (const auto& a : atoms_) m += std::abs(a.weight) * (1.0 + std::abs(a.s)) * (1.0 + std::abs(a.t));
    return m;
}

Function2D FourierMeasure::as_function() const {
    const auto atoms = atoms_;
    const Complex i(0.0, 1.0);
    auto f = [atoms, i](double x, double y) {
        Complex s = 0.0;
        for (const auto& a : atoms) s += a.weight * std::exp(i * (a.s * x + a.t * y));
        return s;
    };
    auto fx = [atoms, i](double x, double y) {
        Complex s = 0.0;
        for (const auto& a : atoms) s += a.weight * i * a.s * std::exp(i * (a.s * x + a.t * y));
        return s;
    };
    auto fy = [atoms, i](double x, double y) {
        Complex s = 0.0;
        for (const auto& a : atoms) s += a.weight * i * a.t * std::exp(i * (a.s * x + a.t * y));
        return s;
    };
    return Function2D(f, fx, fy, "fourier[" + std::to_string(atoms_.size()) + " atoms]");
}

ComplexMatrix apply_fourier_calculus(const FourierMeasure& omega, const HermitianMatrix& a,
                                     const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("apply_fourier_calculus: dimension mismatch");
    const SpectralResolution ea = eig_hermitian(a), eb = eig_hermitian(b);
    const Complex i(0.0, 1.0);
    ComplexMatrix out = ComplexMatrix::Zero(a.dim(), a.dim());
    for (const auto& atom : omega.atoms()) {
        const ComplexMatrix left = ea.apply([&](double x) { return std::exp(i * atom.s * x); });
        const ComplexMatrix right = eb.apply([&](double y) { return std::exp(i * atom.t * y); });
        out += atom.weight * (left * right);
    }
    return out;
}

double check_linearity(const std::vector<Function2D>& phis, const std::vector<Complex>& coeffs,
                       const SpectralResolution& a, const SpectralResolution& b) {
    if (phis.size() != coeffs.size()) throw std::invalid_argument("check_linearity: length mismatch");
    const ComplexMatrix combined = apply_doi(Function2D::linear_combination(phis, coeffs), a, b);
    ComplexMatrix separate = ComplexMatrix::Zero(a.dim(), a.dim());
    for (std::size_t i = 0; i < phis.size(); ++i) separate += coeffs[i] * apply_doi(phis[i], a, b);
    return op_norm(combined - separate);
}

}  // namespace opcalc

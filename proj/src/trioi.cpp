#include "opcalc/trioi.hpp"

#include <cmath>

#include "opcalc/doi.hpp"

namespace opcalc {

namespace {

void require_same_dim(Eigen::Index d, const ComplexMatrix& m, const char* what) {
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

void require_dims(const SpectralResolution& e1, const ComplexMatrix& t, const SpectralResolution& e2,
                  const ComplexMatrix& r, const SpectralResolution& e3, const char* what) {
    const Eigen::Index d = e1.dim();
    if (e2.dim() != d || e3.dim() != d) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    require_same_dim(d, t, what);
    require_same_dim(d, r, what);
}

// Core contraction in eigen-coordinates: out(i,k) = sum_j phi(i,j,k) t(i,j) r(j,k).
ComplexMatrix contract(const TripleIntegrand& phi, const RealVector& l1, const ComplexMatrix& t,
                       const RealVector& l2, const ComplexMatrix& r, const RealVector& l3) {
    const Eigen::Index d = l1.size();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = 0; k < d; ++k) {
            const Complex rjk = r(j, k);
            if (rjk == Complex(0.0)) continue;
            for (Eigen::Index i = 0; i < d; ++i) out(i, k) += phi(l1(i), l2(j), l3(k)) * t(i, j) * rjk;
        }
    return out;
}

}  // namespace

TripleIntegrand::TripleIntegrand(Eval f, std::string descriptor)
    : f_(std::move(f)), provenance_(Provenance::explicit_function), descriptor_(std::move(descriptor)) {
    if (!f_) throw std::invalid_argument("TripleIntegrand: empty evaluator");
}

TripleIntegrand::TripleIntegrand(DividedDifferenceKernel kernel)
    : provenance_(Provenance::divided_difference),
      descriptor_((kernel.axis == Axis::first ? "D1[" : "D2[") + kernel.source.descriptor() + "]") {
    f_ = [k = std::move(kernel)](double x1, double x2, double x3) { return divided_diff(k, x1, x2, x3); };
}

TripleIntegrand TripleIntegrand::constant(Complex c) {
    return TripleIntegrand([c](double, double, double) { return c; }, "const");
}

ComplexMatrix triple_oi(const TripleIntegrand& phi, const SpectralResolution& e1, const ComplexMatrix& t,
                        const SpectralResolution& e2, const ComplexMatrix& r, const SpectralResolution& e3) {
    require_dims(e1, t, e2, r, e3, "triple_oi");
    const ComplexMatrix tt = e1.eigenvectors().adjoint() * t * e2.eigenvectors();
    const ComplexMatrix rr = e2.eigenvectors().adjoint() * r * e3.eigenvectors();
    const ComplexMatrix w = contract(phi, e1.eigenvalues(), tt, e2.eigenvalues(), rr, e3.eigenvalues());
    return e1.eigenvectors() * w * e3.eigenvectors().adjoint();
}

ComplexMatrix triple_oi_dual(const TripleIntegrand& psi, const SpectralResolution& e1, const ComplexMatrix& t,
                             const SpectralResolution& e2, const ComplexMatrix& r, const SpectralResolution& e3) {
    require_dims(e1, t, e2, r, e3, "triple_oi_dual");
    const Eigen::Index d = e1.dim();
    // Inner integral sum Psi(x1,x2,x3) dE2(x2) R dE3(x3) Q' dE1(x1): measures
    // in the order (E2, E3, E1), so the integrand's arguments are rotated.
    const TripleIntegrand rotated(
        [&psi](double x2, double x3, double x1) { return psi(x1, x2, x3); }, "rotated " + psi.descriptor());
    ComplexMatrix w(d, d);
    ComplexMatrix unit = ComplexMatrix::Zero(d, d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) {
            unit(a, b) = 1.0;
            const ComplexMatrix inner = triple_oi(rotated, e2, r, e3, unit, e1);
            // trace(W E_ab) = W(b, a)
            w(b, a) = (inner * t).trace();
            unit(a, b) = 0.0;
        }
    return w;
}

ComplexMatrix commutator_via_trioi(const Function2D& phi, const HermitianMatrix& a, const SpectralResolution& ea,
                                   const HermitianMatrix& b, const SpectralResolution& eb, const ComplexMatrix& q) {
    const Eigen::Index d = a.dim();
    if (b.dim() != d || q.rows() != d || q.cols() != d)
        throw std::invalid_argument("commutator_via_trioi: dimension mismatch");
    const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
    const TripleIntegrand d2(DividedDifferenceKernel{phi, Axis::second});
    const TripleIntegrand d1(DividedDifferenceKernel{phi, Axis::first});
    return triple_oi(d2, ea, identity, eb, commutator(b.matrix(), q), eb) +
           triple_oi(d1, ea, commutator(a.matrix(), q), ea, identity, eb);
}

ComplexMatrix commutator_via_trioi(const Function2D& phi, const HermitianMatrix& a, const HermitianMatrix& b,
                                   const ComplexMatrix& q) {
    const SpectralResolution ea = eig_hermitian(a), eb = eig_hermitian(b);
    const double radius = effective_radius(phi, ea, eb);
    if (std::max(ea.spectral_radius(), eb.spectral_radius()) > radius)
        throw SpectrumOutsideRadius("commutator_via_trioi: spectrum outside radius of '" + phi.descriptor() + "'");
    return commutator_via_trioi(phi, a, ea, b, eb, q);
}

S1BoundReport verify_s1_bound(const Function2D& phi, const HermitianMatrix& a, const HermitianMatrix& b,
                              const ComplexMatrix& q, double besov_estimate) {
    const SpectralResolution ea = eig_hermitian(a), eb = eig_hermitian(b);
    S1BoundReport rep;
    rep.besov_estimate = besov_estimate;
    rep.lhs = trace_norm(commutator(apply_doi(phi, ea, eb), q));
    rep.rhs_core = trace_norm(commutator(a.matrix(), q)) + trace_norm(commutator(b.matrix(), q));
    // Commutators below 1e-13 in trace norm are roundoff, i.e. zero.
    if (rep.rhs_core > 1e-13) rep.ratio = rep.lhs / rep.rhs_core;
    else rep.violation = rep.lhs > 1e-12;
    return rep;
}

}  // namespace opcalc

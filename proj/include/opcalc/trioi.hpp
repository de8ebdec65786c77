#pragma once

// Triple operator integrals
//   W = sum_{i,j,k} Phi(l_i, m_j, n_k) P_i T Q_j R S_k
// over rank-one spectral projections of three Hermitian matrices, the
// duality-form evaluator, and the commutator identity
//   [phi(A,B), Q] = TOI(D2 phi; E_A, I, E_B, [B,Q], E_B)
//                 + TOI(D1 phi; E_A, [A,Q], E_A, I, E_B).

#include <functional>
#include <optional>
#include <string>

#include "opcalc/divdiff.hpp"
#include "opcalc/function2d.hpp"
#include "opcalc/linalg.hpp"

namespace opcalc {

class TripleIntegrand {
public:
    using Eval = std::function<Complex(double, double, double)>;
    enum class Provenance { explicit_function, divided_difference };

    TripleIntegrand(Eval f, std::string descriptor);
    explicit TripleIntegrand(DividedDifferenceKernel kernel);

    Complex operator()(double x1, double x2, double x3) const { return f_(x1, x2, x3); }
    Provenance provenance() const { return provenance_; }
    const std::string& descriptor() const { return descriptor_; }

    static TripleIntegrand constant(Complex c);

private:
    Eval f_;
    Provenance provenance_;
    std::string descriptor_;
};

/// Eigenbasis contraction: with T~ = U1* T U2, R~ = U2* R U3,
///   W~(i,k) = sum_j Phi(l_i, m_j, n_k) T~(i,j) R~(j,k),  W = U1 W~ U3*.
ComplexMatrix triple_oi(const TripleIntegrand& phi, const SpectralResolution& e1, const ComplexMatrix& t,
                        const SpectralResolution& e2, const ComplexMatrix& r, const SpectralResolution& e3);

/// The operator W determined by its pairings
///   trace(W Q') = trace( [sum Psi P2_j R P3_k Q' P1_i] T )
/// against every matrix unit Q' = e_a e_b^T. O(d^5); meant as an oracle for
/// small dimensions.
ComplexMatrix triple_oi_dual(const TripleIntegrand& psi, const SpectralResolution& e1, const ComplexMatrix& t,
                             const SpectralResolution& e2, const ComplexMatrix& r, const SpectralResolution& e3);

/// Right-hand side of the commutator identity (two triple integrals).
ComplexMatrix commutator_via_trioi(const Function2D& phi, const HermitianMatrix& a, const HermitianMatrix& b,
                                   const ComplexMatrix& q);

/// Same with precomputed spectral resolutions.
ComplexMatrix commutator_via_trioi(const Function2D& phi, const HermitianMatrix& a, const SpectralResolution& ea,
                                   const HermitianMatrix& b, const SpectralResolution& eb, const ComplexMatrix& q);

struct S1BoundReport {
    double lhs = 0.0;        // ||[phi(A,B), Q]||_1
    double rhs_core = 0.0;   // ||[A,Q]||_1 + ||[B,Q]||_1
    std::optional<double> ratio;  // lhs / rhs_core when rhs_core > 0
    double besov_estimate = 0.0;
    bool violation = false;  // rhs_core ~ 0 (<= 1e-13) while lhs > 1e-12
};

S1BoundReport verify_s1_bound(const Function2D& phi, const HermitianMatrix& a, const HermitianMatrix& b,
                              const ComplexMatrix& q, double besov_estimate);

}  // namespace opcalc

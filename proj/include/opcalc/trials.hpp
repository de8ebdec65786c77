#pragma once

// Seeded trial harness shared by the command-line checks and the test
// suites. Trial t uses Rng(seed + t); dimensions and test functions cycle
// through the configured lists by trial index.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opcalc/function2d.hpp"
#include "opcalc/linalg.hpp"

namespace opcalc {

/// Real polynomials of degree <= 4 per variable and products of sin/cos,
/// in the documented order.
const std::vector<std::string>& polynomial_trig_family();

/// Bounded trigonometric products (finite Besov norm on the whole plane);
/// used by the trace-norm bound sweep.
const std::vector<std::string>& bounded_trig_family();

std::vector<Function2D> parse_family(const std::vector<std::string>& exprs);

struct TrialRow {
    std::uint64_t seed = 0;
    Eigen::Index dim = 0;
    std::string phi;
    double lhs = 0.0;       // ||[phi(A,B), Q]||_1
    double rhs_core = 0.0;  // ||[A,Q]||_1 + ||[B,Q]||_1
    std::optional<double> ratio;
    double identity_error = 0.0;  // ||via_trioi - [phi(A,B),Q]||_op / (1 + ||[phi(A,B),Q]||_op)
};

/// Header: seed,dim,phi,lhs,rhs_core,ratio,max_identity_error. An undefined
/// ratio is written as an empty field.
std::string trial_csv(const std::vector<TrialRow>& rows);

enum class QChoice {
    random,    ///< Q with uniform [-1,1] real and imaginary parts
    psi,       ///< Q = psi(A,B), psi cycling through `psis`
    identity,  ///< Q = I: every commutator vanishes
};

struct CommutatorTrialConfig {
    std::uint64_t seed = 1;
    int trials = 20;
    std::vector<Eigen::Index> dims{6};
    std::vector<Function2D> phis;
    std::vector<Function2D> psis;
    QChoice q = QChoice::random;
};

/// Random Hermitian A, B (operator norm 1) per trial; checks the commutator
/// identity and records trace-norm quantities.
std::vector<TrialRow> run_commutator_trials(const CommutatorTrialConfig& config);

double max_identity_error(const std::vector<TrialRow>& rows);
/// Largest defined ratio (0 when none are defined).
double max_ratio(const std::vector<TrialRow>& rows);
/// Any row with rhs_core ~ 0 but lhs > 1e-12.
bool any_s1_violation(const std::vector<TrialRow>& rows);

struct TrioiTrialRow {
    std::uint64_t seed = 0;
    Eigen::Index dim = 0;
    std::string integrand;
    double direct_norm = 0.0;  // ||triple_oi||_op
    double dual_error = 0.0;   // ||dual - direct||_op / (1 + ||direct||_op)
};

/// Random spectral resolutions, T, R and a random separable-plus-coupled
/// integrand per trial; compares the direct and duality evaluators.
std::vector<TrioiTrialRow> run_trioi_trials(std::uint64_t seed, int trials, std::vector<Eigen::Index> dims);

std::string trioi_csv(const std::vector<TrioiTrialRow>& rows);

}  // namespace opcalc

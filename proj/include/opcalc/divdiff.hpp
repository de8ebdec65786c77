#pragma once

// Divided differences of a two-variable function and their sinc-system
// (Haagerup-type) expansion for band-limited functions.
//
//   first axis:  D1 phi(x1, x2, y) = (phi(x1,y) - phi(x2,y)) / (x1 - x2)
//   second axis: D2 phi(x, y1, y2) = (phi(x,y1) - phi(x,y2)) / (y1 - y2)
//
// When the two divided arguments are within
// sqrt(eps) * (1 + |p| + |q|) of each other the exact partial derivative at
// their midpoint is used instead of the difference quotient.

#include <span>

#include "opcalc/function2d.hpp"
#include "opcalc/linalg.hpp"

namespace opcalc {

enum class Axis { first, second };

struct DividedDifferenceKernel {
    Function2D source;
    Axis axis;

    Complex operator()(double p, double q, double r) const;
};

/// Threshold below which |p - q| counts as coincident.
double coincidence_threshold(double p, double q);

/// axis=first: D1 phi(p, q, r); axis=second: D2 phi(p, q, r), i.e. p is x and
/// (q, r) are the two y arguments.
Complex divided_diff(const DividedDifferenceKernel& kernel, double p, double q, double r);

/// sin(u)/u at u = x - j*pi, evaluated as (-1)^j sin(x) / (x - j*pi) away
/// from the node.
double lattice_sinc(double x, long j);

/// |sum_{|j| <= J} sinc^2(x - j pi) - 1|
double sinc_partition_defect(double x, long truncation);

/// Truncated expansion of D1 phi for phi band-limited to the unit ball:
///   sum_{|j|,|k| <= J} sinc(x1 - j pi) sinc(x2 - k pi) gamma_jk(y),
///   gamma_jk(y) = (phi(j pi, y) - phi(k pi, y)) / (j pi - k pi),
///   gamma_jj(y) = d phi/dx (j pi, y).
/// The sinc systems have sup_x sum_j sinc^2 = 1, so the tensor norm of the
/// truncated representation is bounded by sup_y ||gamma(y)||_op.
class HaagerupRepresentation {
public:
    HaagerupRepresentation(Function2D source, long truncation);

    long truncation() const { return truncation_; }
    Eigen::Index size() const { return 2 * truncation_ + 1; }
    static constexpr double node_spacing() { return 3.14159265358979323846; }
    const Function2D& source() const { return source_; }

    /// (2J+1)x(2J+1) matrix, row/column index j + J.
    ComplexMatrix gamma(double y) const;

    /// sinc(x - j pi) for |j| <= J.
    Eigen::VectorXd sinc_system(double x) const;

    /// Truncated series at (x1, x2, y).
    Complex series(double x1, double x2, double y) const;

private:
    Function2D source_;
    long truncation_;
};

/// Throws std::invalid_argument unless phi declares a band limit
/// (unit_ball, or the linear edge case).
HaagerupRepresentation build_sinc_haagerup(const Function2D& phi, long truncation);

/// max over probes of ||gamma(y)||_op; throws on an empty probe list.
double haagerup_norm_upper(const HaagerupRepresentation& rep, std::span<const double> probe_ys);

}  // namespace opcalc

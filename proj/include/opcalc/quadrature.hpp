#pragma once

#include <functional>
#include <vector>

namespace opcalc {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// Same rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Integral of f over the unit disk: Gauss-Legendre in u = r^2 on [0, 1]
/// (so r dr = du / 2) times the trapezoid rule in angle with 2n + 2 nodes.
/// Exact for polynomials of total degree <= 2n + 1.
double integrate_unit_disk(const std::function<double(double, double)>& f, int n);

}  // namespace opcalc

#include "opcalc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opcalc {

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double step = p0 / dp;
            z -= step;
            if (std::abs(step) <= 1e-16) break;
        }
        // Recompute derivative at the converged root.
        double p0 = 1.0, p1 = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    QuadratureRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

double integrate_unit_disk(const std::function<double(double, double)>& f, int n) {
    const QuadratureRule radial = gauss_legendre(n, 0.0, 1.0);
    const int angles = 2 * n + 2;
    const double dtheta = 2.0 * std::numbers::pi / angles;
    double total = 0.0;
    for (int a = 0; a < angles; ++a) {
        const double theta = a * dtheta;
        const double c = std::cos(theta), s = std::sin(theta);
        double ring = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = std::sqrt(radial.nodes[i]);
            ring += radial.weights[i] * f(r * c, r * s);
        }
        total += ring;
    }
    return 0.5 * dtheta * total;
}

}  // namespace opcalc

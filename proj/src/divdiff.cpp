#include "opcalc/divdiff.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace opcalc {

double coincidence_threshold(double p, double q) {
    static const double root_eps = std::sqrt(std::numeric_limits<double>::epsilon());
    return root_eps * (1.0 + std::abs(p) + std::abs(q));
}

Complex DividedDifferenceKernel::operator()(double p, double q, double r) const {
    return divided_diff(*this, p, q, r);
}

Complex divided_diff(const DividedDifferenceKernel& kernel, double p, double q, double r) {
    const Function2D& phi = kernel.source;
    if (kernel.axis == Axis::first) {
        // (p, q) are the two x arguments, r is y.
        if (std::abs(p - q) <= coincidence_threshold(p, q)) return phi.d_dx(0.5 * (p + q), r);
        return (phi(p, r) - phi(q, r)) / (p - q);
    }
    // p is x, (q, r) are the two y arguments.
    if (std::abs(q - r) <= coincidence_threshold(q, r)) return phi.d_dy(p, 0.5 * (q + r));
    return (phi(p, q) - phi(p, r)) / (q - r);
}

double lattice_sinc(double x, long j) {
    const double d = x - static_cast<double>(j) * std::numbers::pi;
    if (std::abs(d) < 1e-4) {
        const double d2 = d * d;
        return 1.0 - d2 / 6.0 + d2 * d2 / 120.0;
    }
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * std::sin(x) / d;
}

double sinc_partition_defect(double x, long truncation) {
    if (truncation < 0) throw std::invalid_argument("sinc_partition_defect: negative truncation");
    // Sum small terms first.
    double sum = 0.0;
    for (long m = truncation; m >= 1; --m) {
        const double a = lattice_sinc(x, m), b = lattice_sinc(x, -m);
        sum += a * a + b * b;
    }
    const double c = lattice_sinc(x, 0);
    sum += c * c;
    return std::abs(sum - 1.0);
}

HaagerupRepresentation::HaagerupRepresentation(Function2D source, long truncation)
    : source_(std::move(source)), truncation_(truncation) {
    if (truncation_ < 1) throw std::invalid_argument("HaagerupRepresentation: truncation must be positive");
}

ComplexMatrix HaagerupRepresentation::gamma(double y) const {
    const Eigen::Index n = size();
    Eigen::VectorXcd values(n), slopes(n);
    for (Eigen::Index a = 0; a < n; ++a) {
        const double node = static_cast<double>(a - truncation_) * node_spacing();
        values(a) = source_(node, y);
        slopes(a) = source_.d_dx(node, y);
    }
    ComplexMatrix g(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index j = 0; j < n; ++j)
            g(j, k) = j == k ? slopes(j)
                             : (values(j) - values(k)) / (static_cast<double>(j - k) * node_spacing());
    return g;
}

Eigen::VectorXd HaagerupRepresentation::sinc_system(double x) const {
    Eigen::VectorXd s(size());
    for (Eigen::Index a = 0; a < size(); ++a) s(a) = lattice_sinc(x, static_cast<long>(a) - truncation_);
    return s;
}

Complex HaagerupRepresentation::series(double x1, double x2, double y) const {
    const Eigen::VectorXcd left = sinc_system(x1).cast<Complex>();
    const Eigen::VectorXcd right = sinc_system(x2).cast<Complex>();
    return left.transpose() * gamma(y) * right;
}

HaagerupRepresentation build_sinc_haagerup(const Function2D& phi, long truncation) {
    if (phi.band_limit() == BandLimit::none)
        throw std::invalid_argument("build_sinc_haagerup: '" + phi.descriptor() +
                                    "' is not declared band-limited to the unit ball");
    return HaagerupRepresentation(phi, truncation);
}

double haagerup_norm_upper(const HaagerupRepresentation& rep, std::span<const double> probe_ys) {
    if (probe_ys.empty()) throw std::invalid_argument("haagerup_norm_upper: no probe points");
    double best = 0.0;
    for (double y : probe_ys) best = std::max(best, op_norm(rep.gamma(y)));
    return best;
}

}  // namespace opcalc

#include "opcalc/random.hpp"

#include <cmath>
#include <numbers>

namespace opcalc {

double Rng::normal() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexMatrix random_complex(Rng& rng, Eigen::Index dim) {
    ComplexMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = rng.uniform(-1.0, 1.0);
            m(i, j) = Complex(re, rng.uniform(-1.0, 1.0));
        }
    return m;
}

HermitianMatrix random_hermitian(Rng& rng, Eigen::Index dim) {
    HermitianMatrix h(random_complex(rng, dim));
    const double scale = op_norm(h.matrix());
    return scale > 0.0 ? HermitianMatrix(h.matrix() / scale) : h;
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index dim) {
    ComplexMatrix z(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = rng.normal();
            z(i, j) = Complex(re, rng.normal());
        }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double a = std::abs(r(i, i));
        if (a > 0.0) q.col(i) *= r(i, i) / a;
    }
    return q;
}

}  // namespace opcalc

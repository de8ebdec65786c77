#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "opcalc/besov.hpp"
#include "opcalc/doi.hpp"
#include "opcalc/expr.hpp"
#include "opcalc/random.hpp"
#include "oracles.hpp"

using namespace opcalc;
using opcalc::testing::rel_err;

namespace {

const Complex I(0.0, 1.0);

SpectralResolution eig(const ComplexMatrix& m) { return eig_hermitian(HermitianMatrix(m)); }

ComplexMatrix swap2() {
    ComplexMatrix a(2, 2);
    a << 0.0, 1.0, 1.0, 0.0;
    return a;
}

ComplexMatrix diag(std::initializer_list<double> v) {
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) d(i, i) = x, ++i;
    return d;
}

// sin(x)cos(y) = sum of four exponentials with weights +-1/(4i).
FourierMeasure sin_cos_measure() {
    const Complex w = 1.0 / (4.0 * I);
    return FourierMeasure({{1, 1, w}, {1, -1, w}, {-1, 1, -w}, {-1, -1, -w}});
}

}  // namespace

TEST_CASE("apply_doi: commuting diagonal case") {
    const ComplexMatrix r = apply_doi(expr::parse_function("x+y"), eig(diag({1, 2})), eig(diag({3, 4})));
    CHECK(op_norm(r - diag({4, 6})) <= 1e-14);
}

TEST_CASE("apply_doi: separable x*y gives A*B") {
    const ComplexMatrix a = swap2(), b = diag({1, -1});
    const ComplexMatrix r = apply_doi(expr::parse_function("x*y"), eig(a), eig(b));
    ComplexMatrix want(2, 2);
    want << 0.0, -1.0, 1.0, 0.0;
    CHECK(op_norm(r - want) <= 1e-14);
    CHECK(op_norm(r - a * b) <= 1e-14);
}

TEST_CASE("apply_doi: x^2*y with A^2 = I gives B") {
    const ComplexMatrix b = diag({1, -1});
    const ComplexMatrix r = apply_doi(expr::parse_function("x^2*y"), eig(swap2()), eig(b));
    CHECK(op_norm(r - b) <= 1e-14);
}

TEST_CASE("apply_doi matches the explicit projection sum") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(seed % 6);
        const auto ea = eig_hermitian(random_hermitian(rng, d)), eb = eig_hermitian(random_hermitian(rng, d));
        const Function2D phi = expr::parse_function("cos(x)*sin(y) + x*y^2");
        const auto want = opcalc::testing::brute_force_double([&](double x, double y) { return phi(x, y); }, ea, eb);
        CHECK(rel_err(apply_doi(phi, ea, eb), want) <= 1e-13);
    }
}

TEST_CASE("apply_doi: declared radius") {
    const auto ea = eig(diag({-3, 1})), eb = eig(diag({0.5, 0.25}));
    const Function2D phi = expr::parse_function("x*y");
    CHECK_THROWS_AS(apply_doi(phi.with_radius(2.0), ea, eb), SpectrumOutsideRadius);
    CHECK_THROWS_AS(apply_doi(phi, ea, eb, 2.5), SpectrumOutsideRadius);
    CHECK_NOTHROW(apply_doi(phi, ea, eb, 3.0));
    CHECK(effective_radius(phi, ea, eb) == 4.0);
}

TEST_CASE("separability: u(x)v(y) gives u(A)v(B)") {
    using F = std::function<Complex(double)>;
    struct Factor {
        F f, df;
    };
    const std::vector<Factor> factors = {
        {[](double t) { return Complex(std::sin(t)); }, [](double t) { return Complex(std::cos(t)); }},
        {[](double t) { return Complex(std::cos(t)); }, [](double t) { return Complex(-std::sin(t)); }},
        {[](double t) { return Complex(1 - 2 * t + t * t * t * t); },
         [](double t) { return Complex(-2 + 4 * t * t * t); }},
        {[](double t) { return Complex(t * t * t - 0.5 * t); }, [](double t) { return Complex(3 * t * t - 0.5); }},
        {[](double) { return Complex(3.0); }, [](double) { return Complex(0.0); }},
    };
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        Rng rng(500 + trial);
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(trial % 9);
        const auto ea = eig_hermitian(random_hermitian(rng, d)), eb = eig_hermitian(random_hermitian(rng, d));
        const Factor& u = factors[trial % factors.size()];
        const Factor& v = factors[(trial / factors.size()) % factors.size()];
        const Function2D phi = Function2D::separable(u.f, u.df, v.f, v.df, "u*v");
        const ComplexMatrix want = ea.apply(u.f) * eb.apply(v.f);
        CHECK(rel_err(apply_doi(phi, ea, eb), want) <= 1e-12);
    }
}

TEST_CASE("simultaneously diagonal pairs reduce to the joint calculus") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Rng rng(900 + trial);
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(trial % 7);
        const ComplexMatrix u = random_unitary(rng, d);
        Eigen::VectorXd av(d), bv(d);
        for (Eigen::Index i = 0; i < d; ++i) av(i) = rng.uniform(-1, 1), bv(i) = rng.uniform(-1, 1);
        const HermitianMatrix a(u * av.cast<Complex>().asDiagonal() * u.adjoint());
        const HermitianMatrix b(u * bv.cast<Complex>().asDiagonal() * u.adjoint());
        const Function2D phi = expr::parse_function("sin(x*y) + x^2 - y^3*x");
        Eigen::VectorXcd joint(d);
        for (Eigen::Index i = 0; i < d; ++i) joint(i) = phi(av(i), bv(i));
        const ComplexMatrix want = u * joint.asDiagonal() * u.adjoint();
        CHECK(rel_err(apply_doi(phi, eig_hermitian(a), eig_hermitian(b)), want) <= 1e-12);
    }
}

TEST_CASE("fourier calculus: constant atom") {
    Rng rng(3);
    const HermitianMatrix a = random_hermitian(rng, 4), b = random_hermitian(rng, 4);
    const Complex c(0.3, -2.0);
    const ComplexMatrix r = apply_fourier_calculus(FourierMeasure({{0, 0, c}}), a, b);
    CHECK(op_norm(r - c * ComplexMatrix::Identity(4, 4)) <= 1e-14);
}

TEST_CASE("fourier calculus: cos(x) gives cos(A)") {
    Rng rng(4);
    const HermitianMatrix a = random_hermitian(rng, 5), b = random_hermitian(rng, 5);
    const ComplexMatrix r = apply_fourier_calculus(FourierMeasure({{1, 0, 0.5}, {-1, 0, 0.5}}), a, b);
    // cos(A) through the power series of exp(iA).
    const ComplexMatrix want = 0.5 * (opcalc::testing::expm_i(a.matrix(), 1) + opcalc::testing::expm_i(a.matrix(), -1));
    CHECK(op_norm(r - want) <= 1e-13);
}

TEST_CASE("fourier calculus agrees with apply_doi on sin(x)cos(y), 5x5 seed 7") {
    Rng rng(7);
    const HermitianMatrix a = random_hermitian(rng, 5), b = random_hermitian(rng, 5);
    const FourierMeasure omega = sin_cos_measure();
    const ComplexMatrix via_fourier = apply_fourier_calculus(omega, a, b);
    const ComplexMatrix via_doi = apply_doi(expr::parse_function("sin(x)*cos(y)"), eig_hermitian(a), eig_hermitian(b));
    CHECK(rel_err(via_fourier, via_doi) <= 1e-10);
    // The measure's own function gives the same operator.
    CHECK(rel_err(apply_doi(omega.as_function(), eig_hermitian(a), eig_hermitian(b)), via_doi) <= 1e-12);
}

TEST_CASE("fourier calculus agrees with apply_doi on random trigonometric sums") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        Rng rng(3000 + trial);
        const Eigen::Index d = 1 + static_cast<Eigen::Index>(trial % 8);
        std::vector<FourierAtom> atoms;
        const int n_atoms = 1 + static_cast<int>(trial % 5);
        for (int k = 0; k < n_atoms; ++k)
            atoms.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3), {rng.uniform(-1, 1), rng.uniform(-1, 1)}});
        const FourierMeasure omega(atoms);
        // Scale the spectra up to exercise larger phases.
        const HermitianMatrix a(2.0 * random_hermitian(rng, d).matrix());
        const HermitianMatrix b(2.0 * random_hermitian(rng, d).matrix());
        const ComplexMatrix lhs = apply_fourier_calculus(omega, a, b);
        const ComplexMatrix rhs = apply_doi(omega.as_function(), eig_hermitian(a), eig_hermitian(b));
        CHECK(rel_err(lhs, rhs) <= 1e-10);
        CHECK(omega.weighted_mass() > 0.0);
    }
    CHECK_THROWS_AS(FourierMeasure({}), std::invalid_argument);
}

TEST_CASE("check_linearity") {
    Rng rng(8);
    const auto ea = eig_hermitian(random_hermitian(rng, 6)), eb = eig_hermitian(random_hermitian(rng, 6));
    const Function2D phi = expr::parse_function("sin(x)*cos(2*y) + x");
    CHECK(check_linearity({phi}, {1.0}, ea, eb) <= 1e-15);

    const Function2D minus = expr::parse_function("-(sin(x)*cos(2*y) + x)");
    CHECK(check_linearity({phi, minus}, {1.0, 1.0}, ea, eb) <= 1e-14);

    const std::vector<Function2D> trig = {expr::parse_function("sin(x)*cos(y) + 2*cos(3*x)"),
                                          expr::parse_function("cos(x - y)*sin(2*y)"),
                                          expr::parse_function("sin(x)^2*cos(y)^3")};
    for (int t = 0; t < 10; ++t) {
        const std::vector<Complex> c = {{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                        {rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                        {rng.uniform(-1, 1), rng.uniform(-1, 1)}};
        CHECK(check_linearity(trig, c, ea, eb) <= 1e-12);
    }
    CHECK_THROWS_AS(check_linearity({phi}, {1.0, 2.0}, ea, eb), std::invalid_argument);
}

TEST_CASE("operator norm stays bounded relative to the Besov estimate as dimension grows") {
    // Trigonometric phi has a finite Besov norm on the whole plane; the ratio
    // ||phi(A,B)||_op / estimate must stay finite and not blow up with d.
    const Function2D phi = expr::parse_function("sin(x)*cos(y) + cos(2*x)*sin(y)");
    const double estimate =
        besov_norm_estimate(sample_grid(phi, 128, 8 * std::numbers::pi), 8 * std::numbers::pi).estimate;
    REQUIRE(estimate > 0.0);
    std::vector<double> worst;
    for (Eigen::Index d : {4, 8, 16, 32}) {
        double m = 0.0;
        for (std::uint64_t t = 0; t < 10; ++t) {
            Rng rng(700 + t + 100 * static_cast<std::uint64_t>(d));
            const HermitianMatrix a(2.0 * random_hermitian(rng, d).matrix());
            const HermitianMatrix b(2.0 * random_hermitian(rng, d).matrix());
            m = std::max(m, op_norm(apply_doi(phi, eig_hermitian(a), eig_hermitian(b))) / estimate);
        }
        MESSAGE("dim " << d << ": max ||phi(A,B)|| / besov estimate = " << m);
        CHECK(std::isfinite(m));
        worst.push_back(m);
    }
    CHECK(worst.back() <= 2.0 * worst.front());
}

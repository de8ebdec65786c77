#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>

#include "opcalc/linalg.hpp"
#include "opcalc/matrix_io.hpp"
#include "opcalc/random.hpp"

using namespace opcalc;

namespace {

double reconstruction_residual(const HermitianMatrix& h, const SpectralResolution& e) {
    return op_norm(e.reconstruct() - h.matrix()) / (1.0 + op_norm(h.matrix()));
}

double unitarity_defect(const SpectralResolution& e) {
    const auto d = e.dim();
    return op_norm(e.eigenvectors().adjoint() * e.eigenvectors() - ComplexMatrix::Identity(d, d));
}

}  // namespace

TEST_CASE("hermitization is exact as stored") {
    Rng rng(5);
    const HermitianMatrix h(random_complex(rng, 7));
    for (Eigen::Index i = 0; i < 7; ++i)
        for (Eigen::Index j = 0; j < 7; ++j) CHECK(h(i, j) == std::conj(h(j, i)));
    CHECK_THROWS_AS(HermitianMatrix(ComplexMatrix(2, 3)), std::invalid_argument);
    ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
    bad(0, 1) = std::nan("");
    CHECK_THROWS_AS(HermitianMatrix{bad}, std::invalid_argument);
}

TEST_CASE("eig_hermitian: diagonal input") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const SpectralResolution e = eig_hermitian(HermitianMatrix(d));
    CHECK(e.eigenvalues()(0) == doctest::Approx(1.0));
    CHECK(e.eigenvalues()(1) == doctest::Approx(2.0));
    CHECK(e.eigenvalues()(2) == doctest::Approx(3.0));
    // Permutation eigenvectors: eigenvalue 1 lives on e_1, 2 on e_2, 3 on e_0.
    CHECK(std::abs(e.eigenvectors()(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(e.eigenvectors()(2, 1)) == doctest::Approx(1.0));
    CHECK(std::abs(e.eigenvectors()(0, 2)) == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian: swap matrix") {
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    const SpectralResolution e = eig_hermitian(HermitianMatrix(x));
    CHECK(e.eigenvalues()(0) == doctest::Approx(-1.0));
    CHECK(e.eigenvalues()(1) == doctest::Approx(1.0));
    Eigen::Vector2cd minus(1.0, -1.0), plus(1.0, 1.0);
    minus /= std::sqrt(2.0);
    plus /= std::sqrt(2.0);
    CHECK(std::abs(minus.dot(e.eigenvectors().col(0))) == doctest::Approx(1.0));
    CHECK(std::abs(plus.dot(e.eigenvectors().col(1))) == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian: random 8x8, seed 42") {
    Rng rng(42);
    const HermitianMatrix h(random_complex(rng, 8));
    const SpectralResolution e = eig_hermitian(h);
    CHECK(reconstruction_residual(h, e) <= 1e-12);
    CHECK(unitarity_defect(e) <= 1e-12);
}

TEST_CASE("eig_hermitian: reconstruction property over dims and scales") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const Eigen::Index d = 1 + static_cast<Eigen::Index>(seed % 24);
        const double scale = std::pow(10.0, static_cast<double>(seed % 7) - 3.0);
        const HermitianMatrix h(scale * random_complex(rng, d));
        const SpectralResolution e = eig_hermitian(h);
        CHECK(reconstruction_residual(h, e) <= 1e-12);
        CHECK(unitarity_defect(e) <= 1e-12);
        for (Eigen::Index i = 1; i < d; ++i) CHECK(e.eigenvalues()(i) >= e.eigenvalues()(i - 1));
    }
}

TEST_CASE("eig_hermitian: repeated eigenvalues keep separate projections") {
    const HermitianMatrix h(ComplexMatrix::Identity(4, 4) * 2.0);
    const SpectralResolution e = eig_hermitian(h);
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        CHECK(trace_norm(e.projection(i)) == doctest::Approx(1.0));
        sum += e.projection(i);
    }
    CHECK(op_norm(sum - ComplexMatrix::Identity(4, 4)) <= 1e-14);
}

TEST_CASE("commutator examples") {
    Rng rng(1);
    const ComplexMatrix y = random_complex(rng, 4);
    CHECK(commutator(ComplexMatrix::Identity(4, 4), y).norm() == 0.0);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2), n = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    n(0, 1) = 1.0;
    const ComplexMatrix c = commutator(d, n);
    CHECK(c(0, 1) == Complex(-1.0));
    CHECK(c(0, 0) == Complex(0.0));
    CHECK(c(1, 0) == Complex(0.0));
    CHECK(c(1, 1) == Complex(0.0));

    CHECK_THROWS_AS(commutator(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("trace of a finite commutator vanishes") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(seed % 12);
        const ComplexMatrix x = random_complex(rng, d), y = random_complex(rng, d);
        CHECK(std::abs(commutator(x, y).trace()) <= 1e-12 * op_norm(x) * op_norm(y) * d);
    }
}

TEST_CASE("schatten norm examples") {
    CHECK(schatten_norm(ComplexMatrix::Zero(3, 3), SchattenIndex::one) == 0.0);
    Eigen::Vector3cd v(1.0, Complex(0.0, 1.0), 2.0);
    v.normalize();
    CHECK(schatten_norm(v * v.adjoint(), SchattenIndex::one) == doctest::Approx(1.0).epsilon(1e-14));
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = -4.0;
    CHECK(schatten_norm(d, SchattenIndex::one) == doctest::Approx(7.0).epsilon(1e-14));
    CHECK(schatten_norm(d, SchattenIndex::two) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(schatten_norm(d, SchattenIndex::op) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("schatten norms: ordering, triangle inequality, unitary invariance") {
    const SchattenIndex ps[] = {SchattenIndex::one, SchattenIndex::two, SchattenIndex::op};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(1000 + seed);
        const Eigen::Index d = 1 + static_cast<Eigen::Index>(seed % 9);
        const ComplexMatrix x = random_complex(rng, d), y = random_complex(rng, d);
        const double n1 = schatten_norm(x, SchattenIndex::one);
        const double n2 = schatten_norm(x, SchattenIndex::two);
        const double no = schatten_norm(x, SchattenIndex::op);
        CHECK(n1 >= n2 * (1 - 1e-14));
        CHECK(n2 >= no * (1 - 1e-14));
        for (auto p : ps)
            CHECK(schatten_norm(x + y, p) <= (schatten_norm(x, p) + schatten_norm(y, p)) * (1 + 1e-14));
        if (seed % 4 == 0) {
            const ComplexMatrix u = random_unitary(rng, d), w = random_unitary(rng, d);
            for (auto p : ps) {
                const double base = schatten_norm(x, p);
                CHECK(std::abs(schatten_norm(u * x * w, p) - base) <= 1e-12 * (1.0 + base));
            }
        }
    }
}

TEST_CASE("principal_trace") {
    CHECK(principal_trace(ComplexMatrix::Identity(5, 5), 3) == Complex(3.0));
    ComplexMatrix d = ComplexMatrix::Zero(4, 4);
    d(0, 0) = 0.5;
    d(3, 3) = -0.5;
    CHECK(principal_trace(d, 2) == Complex(0.5));
    Rng rng(6);
    const ComplexMatrix x = random_complex(rng, 6);
    CHECK(principal_trace(x, 6) == x.trace());
    CHECK_THROWS_AS(principal_trace(x, 7), std::invalid_argument);
    CHECK_THROWS_AS(principal_trace(x, 0), std::invalid_argument);
}

TEST_CASE("matrix json round-trips bit-exactly") {
    Rng rng(77);
    ComplexMatrix m = random_complex(rng, 5);
    m(0, 0) = Complex(0.1, -1e-300);
    m(1, 2) = Complex(1.0 / 3.0, 6.02214076e23);
    const auto path = std::filesystem::temp_directory_path() / "opcalc_matrix_roundtrip.json";
    write_matrix(path, m);
    const ComplexMatrix back = read_matrix(path);
    REQUIRE(back.rows() == 5);
    CHECK(std::memcmp(back.data(), m.data(), sizeof(Complex) * 25) == 0);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(read_matrix("/nonexistent/opcalc/a.json"), IoError);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"dim", 2}, {"re", {{1, 2}}}, {"im", {{0, 0}}}}),
                    std::invalid_argument);
}

#pragma once

// Seeded random source for reproducible trials.
//
// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
// standard. Real variates are derived here rather than through <random>
// distributions (whose algorithms are implementation-defined), so tables
// reproduce across standard libraries:
//   uniform01 = (bits >> 11) * 2^-53
//   normal    = Box-Muller cosine branch

#include <cstdint>
#include <random>

#include "opcalc/linalg.hpp"

namespace opcalc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    double normal();
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Entries with real and imaginary parts uniform on [-1, 1].
ComplexMatrix random_complex(Rng& rng, Eigen::Index dim);

/// Hermitian matrix rescaled to operator norm 1 (spectrum in [-1, 1]).
HermitianMatrix random_hermitian(Rng& rng, Eigen::Index dim);

/// Haar-distributed unitary from the QR factorization of a Ginibre matrix.
ComplexMatrix random_unitary(Rng& rng, Eigen::Index dim);

}  // namespace opcalc

#pragma once

// Littlewood-Paley estimate of the B^1_{inf,1}(R^2) norm from samples on a
// uniform periodic grid over [-L, L)^2.
//
// Angular frequencies on the grid are xi = (pi / L) * m, m in [-G/2, G/2).
// Band n uses the triangular filter w_n(xi) = max(0, 1 - |log2|xi| - n|);
// the top band is held at 1 above 2^n_max and everything left below the
// bottom band goes to a coarse block, so coarse + sum_n w_n == 1 exactly.
//
//   estimate = 2^n_min * sup|coarse| + sum_n 2^n * sup|band n|

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "opcalc/function2d.hpp"
#include "opcalc/linalg.hpp"

namespace opcalc {

struct BesovOptions {
    std::optional<int> n_min;  // default floor(log2(pi / L))
    std::optional<int> n_max;  // default ceil(log2 of the largest grid frequency)
};

struct BesovDecomposition {
    Eigen::Index grid_size = 0;
    double half_width = 0.0;
    int n_min = 0;
    int n_max = 0;
    std::vector<double> band_sup;  // index n - n_min
    double coarse_sup = 0.0;
    double coarse_weight = 0.0;  // 2^n_min
    double estimate = 0.0;

    nlohmann::json to_json() const;
};

/// Filter value of band n at radial frequency |xi| (no top/bottom handling).
double band_filter(int n, double abs_xi);

/// In-place radix-2 FFT; the inverse is unnormalized. Throws unless the size
/// is a power of two.
void fft(std::span<Complex> data, bool inverse);
void fft2(ComplexMatrix& grid, bool inverse);

BesovDecomposition besov_norm_estimate(const ComplexMatrix& samples, double half_width,
                                       const BesovOptions& options = {});

/// samples(i, k) = phi(-L + i h, -L + k h), h = 2L/G.
ComplexMatrix sample_grid(const Function2D& phi, Eigen::Index grid_size, double half_width);

/// Estimate for phi * chi(x) chi(y), where chi is a C-infinity cutoff equal
/// to 1 on [-R, R] and 0 outside [-2R, 2R]; sampled on G x G over [-4R, 4R)^2.
/// Makes polynomials (unbounded on the plane) usable with a spectral radius R.
BesovDecomposition besov_estimate_localized(const Function2D& phi, double radius, Eigen::Index grid_size = 256);

/// Grid files: JSON {"G", "L", "re", "im"} or binary
/// ("OPGRID01", uint64 G, float64 L, then G*G (re, im) float64 pairs row-major,
/// little-endian).
struct GridFile {
    ComplexMatrix samples;
    double half_width = 0.0;
};

GridFile read_grid(const std::filesystem::path& path);
void write_grid_json(const std::filesystem::path& path, const GridFile& grid);
void write_grid_binary(const std::filesystem::path& path, const GridFile& grid);

bool is_power_of_two(Eigen::Index n);

}  // namespace opcalc

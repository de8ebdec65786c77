#include "opcalc/besov.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

#include "opcalc/matrix_io.hpp"

namespace opcalc {

static_assert(std::endian::native == std::endian::little, "binary grid format assumes a little-endian host");

namespace {

constexpr char kGridMagic[8] = {'O', 'P', 'G', 'R', 'I', 'D', '0', '1'};

double sup_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double signed_frequency(Eigen::Index m, Eigen::Index g, double half_width) {
    const Eigen::Index signed_m = m < g / 2 ? m : m - g;
    return std::numbers::pi * static_cast<double>(signed_m) / half_width;
}

}  // namespace

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

double band_filter(int n, double abs_xi) {
    if (abs_xi <= 0.0) return 0.0;
    return std::max(0.0, 1.0 - std::abs(std::log2(abs_xi) - n));
}

void fft(std::span<Complex> data, bool inverse) {
    const std::size_t n = data.size();
    if (!is_power_of_two(static_cast<Eigen::Index>(n))) throw std::invalid_argument("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        for (std::size_t k = 0; k < half; ++k) {
            const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len);
            const Complex w(std::cos(angle), std::sin(angle));
            for (std::size_t start = 0; start < n; start += len) {
                const Complex u = data[start + k];
                const Complex v = data[start + k + half] * w;
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

void fft2(ComplexMatrix& grid, bool inverse) {
    // Eigen storage is column-major: columns are contiguous.
    for (Eigen::Index c = 0; c < grid.cols(); ++c)
        fft(std::span<Complex>(grid.col(c).data(), static_cast<std::size_t>(grid.rows())), inverse);
    Eigen::VectorXcd row(grid.cols());
    for (Eigen::Index r = 0; r < grid.rows(); ++r) {
        row = grid.row(r).transpose();
        fft(std::span<Complex>(row.data(), static_cast<std::size_t>(row.size())), inverse);
        grid.row(r) = row.transpose();
    }
}

BesovDecomposition besov_norm_estimate(const ComplexMatrix& samples, double half_width,
                                       const BesovOptions& options) {
    const Eigen::Index g = samples.rows();
    if (samples.cols() != g || !is_power_of_two(g))
        throw std::invalid_argument("besov_norm_estimate: grid must be GxG with G a power of two");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("besov_norm_estimate: half-width must be positive");
    if (!samples.allFinite()) throw std::invalid_argument("besov_norm_estimate: non-finite sample");

    const double lowest = std::numbers::pi / half_width;
    const double highest = lowest * static_cast<double>(g / 2) * std::numbers::sqrt2;
    BesovDecomposition out;
    out.grid_size = g;
    out.half_width = half_width;
    out.n_min = options.n_min.value_or(static_cast<int>(std::floor(std::log2(lowest))));
    out.n_max = options.n_max.value_or(static_cast<int>(std::ceil(std::log2(highest))));
    if (out.n_max < out.n_min) throw std::invalid_argument("besov_norm_estimate: n_max < n_min");
    out.coarse_weight = std::ldexp(1.0, out.n_min);

    ComplexMatrix spectrum = samples;
    fft2(spectrum, false);

    Eigen::MatrixXd radius(g, g);
    for (Eigen::Index k = 0; k < g; ++k)
        for (Eigen::Index i = 0; i < g; ++i)
            radius(i, k) = std::hypot(signed_frequency(i, g, half_width), signed_frequency(k, g, half_width));

    const double norm = 1.0 / static_cast<double>(g * g);
    Eigen::MatrixXd covered = Eigen::MatrixXd::Zero(g, g);
    for (int n = out.n_min; n <= out.n_max; ++n) {
        ComplexMatrix band(g, g);
        for (Eigen::Index k = 0; k < g; ++k)
            for (Eigen::Index i = 0; i < g; ++i) {
                const double r = radius(i, k);
                double w = band_filter(n, r);
                if (n == out.n_max && r >= std::ldexp(1.0, n)) w = 1.0;
                covered(i, k) += w;
                band(i, k) = spectrum(i, k) * w;
            }
        fft2(band, true);
        const double s = sup_abs(band) * norm;
        out.band_sup.push_back(s);
        out.estimate += std::ldexp(1.0, n) * s;
    }
    ComplexMatrix coarse(g, g);
    for (Eigen::Index k = 0; k < g; ++k)
        for (Eigen::Index i = 0; i < g; ++i) coarse(i, k) = spectrum(i, k) * (1.0 - covered(i, k));
    fft2(coarse, true);
    out.coarse_sup = sup_abs(coarse) * norm;
    out.estimate += out.coarse_weight * out.coarse_sup;
    return out;
}

nlohmann::json BesovDecomposition::to_json() const {
    nlohmann::json bands = nlohmann::json::array();
    for (std::size_t b = 0; b < band_sup.size(); ++b)
        bands.push_back({{"n", n_min + static_cast<int>(b)}, {"sup_norm", band_sup[b]}});
    return {{"G", grid_size},
            {"L", half_width},
            {"n_min", n_min},
            {"n_max", n_max},
            {"bands", std::move(bands)},
            {"coarse", {{"weight", coarse_weight}, {"sup_norm", coarse_sup}}},
            {"estimate", estimate}};
}

ComplexMatrix sample_grid(const Function2D& phi, Eigen::Index grid_size, double half_width) {
    if (!is_power_of_two(grid_size)) throw std::invalid_argument("sample_grid: G must be a power of two");
    const double h = 2.0 * half_width / static_cast<double>(grid_size);
    ComplexMatrix s(grid_size, grid_size);
    for (Eigen::Index k = 0; k < grid_size; ++k)
        for (Eigen::Index i = 0; i < grid_size; ++i)
            s(i, k) = phi(-half_width + static_cast<double>(i) * h, -half_width + static_cast<double>(k) * h);
    return s;
}

namespace {

double smooth_step(double u) { return u <= 0.0 ? 0.0 : std::exp(-1.0 / u); }

double cutoff(double t, double radius) {
    const double s = (std::abs(t) - radius) / radius;
    if (s <= 0.0) return 1.0;
    if (s >= 1.0) return 0.0;
    return smooth_step(1.0 - s) / (smooth_step(1.0 - s) + smooth_step(s));
}

}  // namespace

BesovDecomposition besov_estimate_localized(const Function2D& phi, double radius, Eigen::Index grid_size) {
    if (!(radius > 0.0)) throw std::invalid_argument("besov_estimate_localized: radius must be positive");
    if (!is_power_of_two(grid_size)) throw std::invalid_argument("besov_estimate_localized: G must be a power of two");
    const double half_width = 4.0 * radius;
    const double h = 2.0 * half_width / static_cast<double>(grid_size);
    ComplexMatrix s(grid_size, grid_size);
    for (Eigen::Index k = 0; k < grid_size; ++k)
        for (Eigen::Index i = 0; i < grid_size; ++i) {
            const double x = -half_width + static_cast<double>(i) * h;
            const double y = -half_width + static_cast<double>(k) * h;
            const double w = cutoff(x, radius) * cutoff(y, radius);
            s(i, k) = w == 0.0 ? Complex(0.0) : phi(x, y) * w;
        }
    return besov_norm_estimate(s, half_width);
}

GridFile read_grid(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    char magic[8] = {};
    in.read(magic, sizeof magic);
    GridFile out;
    if (in && std::memcmp(magic, kGridMagic, sizeof magic) == 0) {
        std::uint64_t g = 0;
        double l = 0.0;
        in.read(reinterpret_cast<char*>(&g), sizeof g);
        in.read(reinterpret_cast<char*>(&l), sizeof l);
        if (!in || g == 0 || g > (1u << 14)) throw IoError("bad binary grid header in " + path.string());
        std::vector<double> raw(2 * g * g);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size() * sizeof(double)));
        if (!in) throw IoError("truncated binary grid in " + path.string());
        const auto n = static_cast<Eigen::Index>(g);
        out.samples.resize(n, n);
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index c = 0; c < n; ++c) {
                const std::size_t at = 2 * static_cast<std::size_t>(r * n + c);
                out.samples(r, c) = Complex(raw[at], raw[at + 1]);
            }
        out.half_width = l;
        return out;
    }
    in.clear();
    in.seekg(0);
    nlohmann::json j;
    try {
        in >> j;
        const auto n = j.at("G").get<Eigen::Index>();
        out.half_width = j.at("L").get<double>();
        const auto& re = j.at("re");
        const bool has_im = j.contains("im");
        out.samples.resize(n, n);
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index c = 0; c < n; ++c)
                out.samples(r, c) = Complex(re.at(r).at(c).get<double>(),
                                            has_im ? j["im"].at(r).at(c).get<double>() : 0.0);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed grid json in " + path.string() + ": " + e.what());
    }
    return out;
}

void write_grid_json(const std::filesystem::path& path, const GridFile& grid) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < grid.samples.rows(); ++r) {
        nlohmann::json rr = nlohmann::json::array(), ri = nlohmann::json::array();
        for (Eigen::Index c = 0; c < grid.samples.cols(); ++c) {
            rr.push_back(grid.samples(r, c).real());
            ri.push_back(grid.samples(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    out << nlohmann::json{{"G", grid.samples.rows()}, {"L", grid.half_width}, {"re", re}, {"im", im}}.dump()
        << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

void write_grid_binary(const std::filesystem::path& path, const GridFile& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    const auto g = static_cast<std::uint64_t>(grid.samples.rows());
    out.write(kGridMagic, sizeof kGridMagic);
    out.write(reinterpret_cast<const char*>(&g), sizeof g);
    out.write(reinterpret_cast<const char*>(&grid.half_width), sizeof grid.half_width);
    for (Eigen::Index r = 0; r < grid.samples.rows(); ++r)
        for (Eigen::Index c = 0; c < grid.samples.cols(); ++c) {
            const double pair[2] = {grid.samples(r, c).real(), grid.samples(r, c).imag()};
            out.write(reinterpret_cast<const char*>(pair), sizeof pair);
        }
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace opcalc

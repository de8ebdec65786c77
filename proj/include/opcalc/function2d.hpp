#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace opcalc {

/// Frequency-support declaration used by the sinc (Haagerup) expansion.
enum class BandLimit {
    none,       ///< no declaration; the sinc expansion refuses it
    unit_ball,  ///< Fourier transform supported in {|xi| <= 1}
    linear,     ///< affine in x: distributional transform at 0, admitted as an edge case
};

/// Scalar field on R^2 with exact partial derivatives.
class Function2D {
public:
    using Scalar = std::complex<double>;
    using Field = std::function<Scalar(double, double)>;

    Function2D(Field f, Field d_dx, Field d_dy, std::string descriptor);

    Scalar operator()(double x, double y) const { return f_(x, y); }
    Scalar d_dx(double x, double y) const { return dx_(x, y); }
    Scalar d_dy(double x, double y) const { return dy_(x, y); }

    const std::string& descriptor() const { return descriptor_; }

    /// Declared radius R: evaluation is only promised on [-R, R]^2. Empty
    /// means the whole plane.
    std::optional<double> radius() const { return radius_; }
    BandLimit band_limit() const { return band_; }

    Function2D with_radius(double r) const;
    Function2D with_band_limit(BandLimit b) const;

    /// Sum with coefficients: sum_i c_i * f_i. Throws on length mismatch or
    /// empty input.
    static Function2D linear_combination(const std::vector<Function2D>& fs,
                                         const std::vector<Scalar>& coeffs);

    /// u(x) * v(y) with derivatives du, dv.
    static Function2D separable(std::function<Scalar(double)> u, std::function<Scalar(double)> du,
                                std::function<Scalar(double)> v, std::function<Scalar(double)> dv,
                                std::string descriptor);

    /// Largest relative deviation between the exact partials and central
    /// finite differences with step cbrt(eps)*(1+|t|), over `probes` seeded
    /// points in [-R, R]^2. Relative to 1 + |exact|.
    double partials_fd_deviation(double radius, int probes, std::uint64_t seed) const;

private:
    Field f_, dx_, dy_;
    std::string descriptor_;
    std::optional<double> radius_;
    BandLimit band_ = BandLimit::none;
};

}  // namespace opcalc

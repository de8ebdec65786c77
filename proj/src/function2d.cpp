#include "opcalc/function2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "opcalc/random.hpp"

namespace opcalc {

Function2D::Function2D(Field f, Field d_dx, Field d_dy, std::string descriptor)
    : f_(std::move(f)), dx_(std::move(d_dx)), dy_(std::move(d_dy)), descriptor_(std::move(descriptor)) {
    if (!f_ || !dx_ || !dy_) throw std::invalid_argument("Function2D: empty evaluator");
}

Function2D Function2D::with_radius(double r) const {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("Function2D: radius must be positive");
    Function2D out = *this;
    out.radius_ = r;
    return out;
}

Function2D Function2D::with_band_limit(BandLimit b) const {
    Function2D out = *this;
    out.band_ = b;
    return out;
}

Function2D Function2D::linear_combination(const std::vector<Function2D>& fs,
                                          const std::vector<Scalar>& coeffs) {
    if (fs.size() != coeffs.size())
        throw std::invalid_argument("linear_combination: functions and coefficients differ in length");
    if (fs.empty()) throw std::invalid_argument("linear_combination: empty input");
    auto combine = [fs, coeffs](auto member) {
        return [fs, coeffs, member](double x, double y) {
            Scalar s = 0.0;
            for (std::size_t i = 0; i < fs.size(); ++i) s += coeffs[i] * member(fs[i], x, y);
            return s;
        };
    };
    std::string desc;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) desc += " + ";
        desc += "(" + std::to_string(coeffs[i].real()) + "," + std::to_string(coeffs[i].imag()) + ")*(" +
                fs[i].descriptor() + ")";
    }
    Function2D out(combine([](const Function2D& f, double x, double y) { return f(x, y); }),
                   combine([](const Function2D& f, double x, double y) { return f.d_dx(x, y); }),
                   combine([](const Function2D& f, double x, double y) { return f.d_dy(x, y); }), desc);
    for (const auto& f : fs)
        if (f.radius_) out.radius_ = out.radius_ ? std::min(*out.radius_, *f.radius_) : f.radius_;
    return out;
}

Function2D Function2D::separable(std::function<Scalar(double)> u, std::function<Scalar(double)> du,
                                 std::function<Scalar(double)> v, std::function<Scalar(double)> dv,
                                 std::string descriptor) {
    return Function2D([u, v](double x, double y) { return u(x) * v(y); },
                      [du, v](double x, double y) { return du(x) * v(y); },
                      [u, dv](double x, double y) { return u(x) * dv(y); }, std::move(descriptor));
}

double Function2D::partials_fd_deviation(double radius, int probes, std::uint64_t seed) const {
    const double step = std::cbrt(std::numeric_limits<double>::epsilon());
    Rng rng(seed);
    double worst = 0.0;
    for (int n = 0; n < probes; ++n) {
        const double x = rng.uniform(-radius, radius);
        const double y = rng.uniform(-radius, radius);
        const double hx = step * (1.0 + std::abs(x));
        const double hy = step * (1.0 + std::abs(y));
        const Scalar fdx = (f_(x + hx, y) - f_(x - hx, y)) / (2.0 * hx);
        const Scalar fdy = (f_(x, y + hy) - f_(x, y - hy)) / (2.0 * hy);
        const Scalar ex = dx_(x, y), ey = dy_(x, y);
        worst = std::max(worst, std::abs(fdx - ex) / (1.0 + std::abs(ex)));
        worst = std::max(worst, std::abs(fdy - ey) / (1.0 + std::abs(ey)));
    }
    return worst;
}

}  // namespace opcalc

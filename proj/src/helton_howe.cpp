#include "opcalc/helton_howe.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "opcalc/doi.hpp"
#include "opcalc/matrix_io.hpp"
#include "opcalc/quadrature.hpp"

namespace opcalc {

ShiftModel shift_truncation(Eigen::Index m) {
    if (m < 2) throw std::invalid_argument("shift_truncation: M must be at least 2");
    ComplexMatrix a = ComplexMatrix::Zero(m, m), b = ComplexMatrix::Zero(m, m);
    for (Eigen::Index k = 0; k + 1 < m; ++k) {
        a(k, k + 1) = a(k + 1, k) = 0.5;
        b(k, k + 1) = Complex(0.0, 0.5);
        b(k + 1, k) = Complex(0.0, -0.5);
    }
    return ShiftModel{m, HermitianMatrix(a), HermitianMatrix(b)};
}

PrincipalFunction::PrincipalFunction(std::function<double(double, double)> g, std::string descriptor,
                                     double support_radius)
    : g_(std::move(g)), descriptor_(std::move(descriptor)), support_radius_(support_radius) {
    if (!g_) throw std::invalid_argument("PrincipalFunction: empty evaluator");
    if (!(support_radius_ > 0.0)) throw std::invalid_argument("PrincipalFunction: support radius must be positive");
}

PrincipalFunction PrincipalFunction::unit_disk() {
    PrincipalFunction g([](double x, double y) { return x * x + y * y <= 1.0 ? 1.0 : 0.0; }, "indicator(unit disk)",
                        1.0);
    g.unit_disk_ = true;
    return g;
}

Complex commutator_trace_estimate(const Function2D& phi, const Function2D& psi, Eigen::Index n, Eigen::Index m) {
    if (n < 1 || 2 * n > m)
        throw std::invalid_argument("commutator_trace_estimate: need 1 <= N <= M/2 (N=" + std::to_string(n) +
                                    ", M=" + std::to_string(m) + ")");
    const ShiftModel model = shift_truncation(m);
    const SpectralResolution ea = eig_hermitian(model.a), eb = eig_hermitian(model.b);
    const ComplexMatrix f = apply_doi(phi, ea, eb);
    const ComplexMatrix g = apply_doi(psi, ea, eb);
    return Complex(0.0, 1.0) * principal_trace(commutator(f, g), n);
}

double jacobian_integral(const Function2D& phi, const Function2D& psi, const PrincipalFunction& g, int quad_points) {
    if (quad_points < 1) throw std::invalid_argument("jacobian_integral: quad_points must be positive");
    auto jacobian = [&](double x, double y) {
        return (phi.d_dx(x, y) * psi.d_dy(x, y) - phi.d_dy(x, y) * psi.d_dx(x, y)).real();
    };
    double integral = 0.0;
    if (g.is_unit_disk()) {
        integral = integrate_unit_disk(jacobian, quad_points);
    } else {
        const int cells = 4 * quad_points;
        const double r = g.support_radius();
        const double h = 2.0 * r / cells;
        for (int i = 0; i < cells; ++i)
            for (int k = 0; k < cells; ++k) {
                const double x = -r + (i + 0.5) * h, y = -r + (k + 0.5) * h;
                const double gv = g(x, y);
                if (gv != 0.0) integral += gv * jacobian(x, y);
            }
        integral *= h * h;
    }
    return integral / (2.0 * std::numbers::pi);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string ExperimentReport::to_csv() const {
    std::string out = "N,M,lhs,rhs,abs_error\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.m) + "," + format_double(r.lhs) + "," +
               format_double(r.rhs) + "," + format_double(r.abs_error) + "\n";
    return out;
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : rows)
        rs.push_back({{"N", r.n},
                      {"M", r.m},
                      {"lhs", r.lhs},
                      {"lhs_imag", r.lhs_imag},
                      {"rhs", r.rhs},
                      {"abs_error", r.abs_error}});
    return {{"metadata",
             {{"phi", phi},
              {"psi", psi},
              {"ratio", ratio},
              {"quad_points", quad_points},
              {"seed", seed},
              {"principal_function", "indicator(unit disk)"}}},
            {"rows", std::move(rs)}};
}

double ExperimentReport::max_lhs_imag() const {
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, std::abs(r.lhs_imag));
    return worst;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& out_path) {
    std::filesystem::path csv = out_path, json = out_path;
    csv.replace_extension(".csv");
    json.replace_extension(".json");
    {
        std::ofstream out(csv);
        if (!out) throw IoError("cannot open for writing: " + csv.string());
        out << report.to_csv();
        if (!out) throw IoError("write failed: " + csv.string());
    }
    std::ofstream out(json);
    if (!out) throw IoError("cannot open for writing: " + json.string());
    out << report.to_json().dump(2) << '\n';
    if (!out) throw IoError("write failed: " + json.string());
}

ExperimentReport run_experiment(const Function2D& phi, const Function2D& psi, const std::vector<Eigen::Index>& ns,
                                Eigen::Index ratio, int quad_points, const std::filesystem::path& out_path) {
    if (ratio < 2) throw std::invalid_argument("run_experiment: ratio must be at least 2");
    if (ns.empty()) throw std::invalid_argument("run_experiment: empty N list");
    ExperimentReport report;
    report.phi = phi.descriptor();
    report.psi = psi.descriptor();
    report.ratio = ratio;
    report.quad_points = quad_points;
    const double rhs = jacobian_integral(phi, psi, PrincipalFunction::unit_disk(), quad_points);
    for (const Eigen::Index n : ns) {
        const Complex lhs = commutator_trace_estimate(phi, psi, n, ratio * n);
        report.rows.push_back({n, ratio * n, lhs.real(), lhs.imag(), rhs, std::abs(lhs.real() - rhs)});
    }
    if (!out_path.empty()) write_report(report, out_path);
    return report;
}

}  // namespace opcalc

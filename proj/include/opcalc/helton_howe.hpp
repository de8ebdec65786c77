#pragma once

// Trace-formula experiments on truncated unilateral shifts.
//
// S_M is the nilpotent M x M shift (ones on the subdiagonal), A_M = Re S_M,
// B_M = Im S_M. i[A_M, B_M] = diag(1/2, 0, ..., 0, -1/2). The untruncated
// pair has principal function equal to the indicator of the closed unit disk.
// The left side trace(i[phi(A,B), psi(A,B)]) is estimated by the trace of
// the leading N x N block of the M x M commutator, M >= 2N.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opcalc/function2d.hpp"
#include "opcalc/linalg.hpp"

namespace opcalc {

struct ShiftModel {
    Eigen::Index size;
    HermitianMatrix a;
    HermitianMatrix b;
};

/// Throws std::invalid_argument for M < 2.
ShiftModel shift_truncation(Eigen::Index m);

class PrincipalFunction {
public:
    PrincipalFunction(std::function<double(double, double)> g, std::string descriptor, double support_radius);

    /// g = 1 on the closed unit disk, 0 elsewhere.
    static PrincipalFunction unit_disk();

    double operator()(double x, double y) const { return g_(x, y); }
    const std::string& descriptor() const { return descriptor_; }
    double support_radius() const { return support_radius_; }
    bool is_unit_disk() const { return unit_disk_; }

private:
    std::function<double(double, double)> g_;
    std::string descriptor_;
    double support_radius_;
    bool unit_disk_ = false;
};

/// principal_trace(i [phi(A_M,B_M), psi(A_M,B_M)], N). Requires 1 <= N <= M/2.
Complex commutator_trace_estimate(const Function2D& phi, const Function2D& psi, Eigen::Index n, Eigen::Index m);

/// (1/2pi) * integral of (phi_x psi_y - phi_y psi_x) g. Unit-disk g uses the
/// polar Gauss-Legendre rule with `quad_points` radial nodes; any other g
/// uses a midpoint grid of 4*quad_points per side over its support square.
double jacobian_integral(const Function2D& phi, const Function2D& psi, const PrincipalFunction& g, int quad_points);

struct ExperimentRow {
    Eigen::Index n = 0;
    Eigen::Index m = 0;
    double lhs = 0.0;
    double lhs_imag = 0.0;
    double rhs = 0.0;
    double abs_error = 0.0;
};

struct ExperimentReport {
    std::string phi;
    std::string psi;
    Eigen::Index ratio = 0;
    int quad_points = 0;
    std::uint64_t seed = 0;
    std::vector<ExperimentRow> rows;

    std::string to_csv() const;
    nlohmann::json to_json() const;

    /// Largest |imag(lhs)| over rows.
    double max_lhs_imag() const;
};

/// One row per N with M = ratio * N; ratio must be >= 2. Rows are written to
/// `out_path` with extension .csv and .json when `out_path` is non-empty.
ExperimentReport run_experiment(const Function2D& phi, const Function2D& psi, const std::vector<Eigen::Index>& ns,
                                Eigen::Index ratio, int quad_points, const std::filesystem::path& out_path = {});

void write_report(const ExperimentReport& report, const std::filesystem::path& out_path);

/// printf("%.17g")
std::string format_double(double v);

}  // namespace opcalc

#include "opcalc/trials.hpp"

#include <algorithm>
#include <cstdio>

#include "opcalc/doi.hpp"
#include "opcalc/expr.hpp"
#include "opcalc/helton_howe.hpp"
#include "opcalc/random.hpp"
#include "opcalc/trioi.hpp"

namespace opcalc {

const std::vector<std::string>& polynomial_trig_family() {
    static const std::vector<std::string> family = {
        "x",
        "y",
        "x*y",
        "x^2*y",
        "x^2*y + y^2",
        "x^3 - 2*x*y^2 + y^4",
        "x^4*y^4 - 3*x*y + 0.5",
        "x^4 + x*y^3 - x^2*y^2",
        "sin(x)*cos(y)",
        "cos(x)*sin(y) + x*y",
        "sin(x)*sin(y) - cos(x)*y^2",
        "cos(x)*cos(y)",
    };
    return family;
}

const std::vector<std::string>& bounded_trig_family() {
    static const std::vector<std::string> family = {
        "sin(x)*cos(y)",
        "cos(x)*sin(y)",
        "sin(x)*sin(y)",
        "cos(x)*cos(y)",
        "sin(2*x)*cos(y) + cos(x)*sin(2*y)",
    };
    return family;
}

std::vector<Function2D> parse_family(const std::vector<std::string>& exprs) {
    std::vector<Function2D> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(expr::parse_function(e));
    return out;
}

std::string trial_csv(const std::vector<TrialRow>& rows) {
    std::string out = "seed,dim,phi,lhs,rhs_core,ratio,max_identity_error\n";
    for (const auto& r : rows) {
        out += std::to_string(r.seed) + "," + std::to_string(r.dim) + ",\"" + r.phi + "\"," + format_double(r.lhs) +
               "," + format_double(r.rhs_core) + "," + (r.ratio ? format_double(*r.ratio) : std::string()) + "," +
               format_double(r.identity_error) + "\n";
    }
    return out;
}

std::vector<TrialRow> run_commutator_trials(const CommutatorTrialConfig& config) {
    if (config.trials < 0) throw std::invalid_argument("run_commutator_trials: negative trial count");
    if (config.dims.empty() || config.phis.empty())
        throw std::invalid_argument("run_commutator_trials: empty dimension or function list");
    if (config.q == QChoice::psi && config.psis.empty())
        throw std::invalid_argument("run_commutator_trials: psi mode needs psi functions");
    std::vector<TrialRow> rows;
    rows.reserve(static_cast<std::size_t>(config.trials));
    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(t);
        const auto ti = static_cast<std::size_t>(t);
        const Eigen::Index d = config.dims[ti % config.dims.size()];
        const Function2D& phi = config.phis[ti % config.phis.size()];
        Rng rng(seed);
        const HermitianMatrix a = random_hermitian(rng, d);
        const HermitianMatrix b = random_hermitian(rng, d);
        const SpectralResolution ea = eig_hermitian(a), eb = eig_hermitian(b);
        ComplexMatrix q;
        switch (config.q) {
            case QChoice::random: q = random_complex(rng, d); break;
            case QChoice::psi: q = apply_doi(config.psis[ti % config.psis.size()], ea, eb); break;
            case QChoice::identity: q = ComplexMatrix::Identity(d, d); break;
        }
        const ComplexMatrix direct = commutator(apply_doi(phi, ea, eb), q);
        const ComplexMatrix via = commutator_via_trioi(phi, a, ea, b, eb, q);

        TrialRow row;
        row.seed = seed;
        row.dim = d;
        row.phi = phi.descriptor();
        row.identity_error = op_norm(via - direct) / (1.0 + op_norm(direct));
        row.lhs = trace_norm(direct);
        row.rhs_core = trace_norm(commutator(a.matrix(), q)) + trace_norm(commutator(b.matrix(), q));
        if (row.rhs_core > 1e-13) row.ratio = row.lhs / row.rhs_core;
        rows.push_back(std::move(row));
    }
    return rows;
}

double max_identity_error(const std::vector<TrialRow>& rows) {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.identity_error);
    return m;
}

double max_ratio(const std::vector<TrialRow>& rows) {
    double m = 0.0;
    for (const auto& r : rows)
        if (r.ratio) m = std::max(m, *r.ratio);
    return m;
}

bool any_s1_violation(const std::vector<TrialRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const TrialRow& r) { return !r.ratio && r.lhs > 1e-12; });
}

std::vector<TrioiTrialRow> run_trioi_trials(std::uint64_t seed, int trials, std::vector<Eigen::Index> dims) {
    if (dims.empty()) throw std::invalid_argument("run_trioi_trials: empty dimension list");
    std::vector<TrioiTrialRow> rows;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        const Eigen::Index d = dims[static_cast<std::size_t>(t) % dims.size()];
        Rng rng(s);
        const SpectralResolution e1 = eig_hermitian(random_hermitian(rng, d));
        const SpectralResolution e2 = eig_hermitian(random_hermitian(rng, d));
        const SpectralResolution e3 = eig_hermitian(random_hermitian(rng, d));
        const ComplexMatrix tm = random_complex(rng, d), rm = random_complex(rng, d);
        const Complex c0(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const Complex c1(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const Complex c2(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const double fa = rng.uniform(-2, 2), fb = rng.uniform(-2, 2);
        char desc[200];
        std::snprintf(desc, sizeof desc, "c0 + c1*x1*x3 + c2*cos(%.6g*x1 + %.6g*x2 - x3)", fa, fb);
        const TripleIntegrand phi(
            [=](double x1, double x2, double x3) {
                return c0 + c1 * x1 * x3 + c2 * std::cos(fa * x1 + fb * x2 - x3);
            },
            desc);
        const ComplexMatrix direct = triple_oi(phi, e1, tm, e2, rm, e3);
        const ComplexMatrix dual = triple_oi_dual(phi, e1, tm, e2, rm, e3);
        const double norm = op_norm(direct);
        rows.push_back({s, d, desc, norm, op_norm(dual - direct) / (1.0 + norm)});
    }
    return rows;
}

std::string trioi_csv(const std::vector<TrioiTrialRow>& rows) {
    std::string out = "seed,dim,integrand,direct_norm,dual_error\n";
    for (const auto& r : rows)
        out += std::to_string(r.seed) + "," + std::to_string(r.dim) + ",\"" + r.integrand + "\"," +
               format_double(r.direct_norm) + "," + format_double(r.dual_error) + "\n";
    return out;
}

}  // namespace opcalc

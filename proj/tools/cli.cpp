#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "opcalc/besov.hpp"
#include "opcalc/divdiff.hpp"
#include "opcalc/doi.hpp"
#include "opcalc/expr.hpp"
#include "opcalc/helton_howe.hpp"
#include "opcalc/matrix_io.hpp"
#include "opcalc/random.hpp"
#include "opcalc/trials.hpp"

namespace opcalc::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    std::string payload;  // written to --out or standard output
    bool passed = true;
    nlohmann::json failure;  // machine-readable record when !passed
};

void emit(const RunConfig& c, const std::string& payload, std::ostream& out) {
    if (c.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(c.out_path);
    if (!f) throw IoError("cannot open for writing: " + c.out_path);
    f << payload;
    if (!f) throw IoError("write failed: " + c.out_path);
}

Function2D require_function(const std::string& text, const char* flag) {
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    return expr::parse_function(text);
}

std::vector<Eigen::Index> to_index(const std::vector<long>& v, const char* flag, long lo) {
    if (v.empty()) throw UsageError(std::string(flag) + " must not be empty");
    std::vector<Eigen::Index> out;
    for (long x : v) {
        if (x < lo) throw UsageError(std::string(flag) + " entries must be >= " + std::to_string(lo));
        out.push_back(x);
    }
    return out;
}

std::vector<Function2D> trial_family(const RunConfig& c, const std::vector<std::string>& fallback) {
    return parse_family(c.phis.empty() ? fallback : c.phis);
}

QChoice q_choice(const std::string& mode) {
    if (mode == "random") return QChoice::random;
    if (mode == "psi") return QChoice::psi;
    if (mode == "identity") return QChoice::identity;
    throw UsageError("--q must be one of random, psi, identity");
}

Outcome run_doi(const RunConfig& c) {
    const Function2D phi = require_function(c.phi, "--phi");
    HermitianMatrix a, b;
    if (!c.a_path.empty() || !c.b_path.empty()) {
        if (c.a_path.empty() || c.b_path.empty()) throw UsageError("--A and --B must be given together");
        a = HermitianMatrix(read_matrix(c.a_path));
        b = HermitianMatrix(read_matrix(c.b_path));
        if (a.dim() != b.dim()) throw UsageError("--A and --B have different dimensions");
    } else {
        if (c.dim < 1) throw UsageError("--dim must be positive");
        Rng rng(c.seed);
        a = random_hermitian(rng, c.dim);
        b = random_hermitian(rng, c.dim);
    }
    const ComplexMatrix result = apply_doi(phi, eig_hermitian(a), eig_hermitian(b), c.radius);
    return {matrix_to_json(result).dump() + "\n", true, {}};
}

Outcome run_trioi_check(const RunConfig& c) {
    const auto dims = to_index(c.dims, "--dims", 1);
    for (auto d : dims)
        if (d > 16) throw UsageError("--dims: the duality evaluator is limited to dimension 16");
    const double tol = c.tolerance.value_or(1e-11);
    const auto rows = run_trioi_trials(c.seed, c.trials, dims);
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.dual_error);
    Outcome o{trioi_csv(rows), worst <= tol, {}};
    if (!o.passed) o.failure = {{"check", "duality"}, {"max_error", worst}, {"tolerance", tol}};
    return o;
}

Outcome run_commutator_check(const RunConfig& c) {
    CommutatorTrialConfig cfg;
    cfg.seed = c.seed;
    cfg.trials = c.trials;
    cfg.dims = c.dims.empty() ? to_index({c.dim}, "--dim", 1) : to_index(c.dims, "--dims", 1);
    cfg.phis = trial_family(c, polynomial_trig_family());
    cfg.q = q_choice(c.q_mode);
    if (cfg.q == QChoice::psi) cfg.psis = parse_family(c.psi.empty() ? polynomial_trig_family() : std::vector{c.psi});
    const double tol = c.tolerance.value_or(1e-10);
    const auto rows = run_commutator_trials(cfg);
    const double worst = max_identity_error(rows);
    Outcome o{trial_csv(rows), worst <= tol, {}};
    if (!o.passed) o.failure = {{"check", "commutator_identity"}, {"max_error", worst}, {"tolerance", tol}};
    return o;
}

Outcome run_s1_bound(const RunConfig& c) {
    CommutatorTrialConfig cfg;
    cfg.seed = c.seed;
    cfg.phis = trial_family(c, bounded_trig_family());
    cfg.q = q_choice(c.q_mode);
    if (cfg.q == QChoice::psi) cfg.psis = parse_family(c.psi.empty() ? bounded_trig_family() : std::vector{c.psi});
    const auto dims = to_index(c.dims, "--dims", 1);
    std::vector<TrialRow> all;
    nlohmann::json summary = nlohmann::json::array();
    bool finite = true;
    for (std::size_t di = 0; di < dims.size(); ++di) {
        cfg.dims = {dims[di]};
        cfg.trials = c.trials * static_cast<int>(cfg.phis.size());
        cfg.seed = c.seed + di * 1000003ULL;
        const auto rows = run_commutator_trials(cfg);
        for (const auto& r : rows) finite = finite && (!r.ratio || std::isfinite(*r.ratio));
        summary.push_back({{"dim", dims[di]}, {"max_ratio", max_ratio(rows)}});
        all.insert(all.end(), rows.begin(), rows.end());
    }
    const bool violation = any_s1_violation(all);
    Outcome o{trial_csv(all), finite && !violation, {}};
    if (!o.passed)
        o.failure = {{"check", "s1_bound"}, {"violation", violation}, {"finite", finite}, {"max_ratio", summary}};
    else
        o.failure = {{"max_ratio", summary}};
    return o;
}

Outcome run_besov(const RunConfig& c) {
    GridFile grid;
    if (!c.input_path.empty()) {
        grid = read_grid(c.input_path);
    } else {
        const Function2D phi = require_function(c.phi, "--phi (or --input)");
        if (!is_power_of_two(c.grid_size)) throw UsageError("--G must be a power of two");
        if (!(c.half_width > 0.0)) throw UsageError("--L must be positive");
        grid.samples = sample_grid(phi, c.grid_size, c.half_width);
        grid.half_width = c.half_width;
    }
    if (!is_power_of_two(grid.samples.rows())) throw UsageError("grid size must be a power of two");
    const BesovDecomposition dec = besov_norm_estimate(grid.samples, grid.half_width, {c.n_min, c.n_max});
    return {dec.to_json().dump(2) + "\n", true, {}};
}

Outcome run_sinc_check(const RunConfig& c) {
    if (c.probes < 2) throw UsageError("--probes must be at least 2");
    std::vector<double> xs;
    for (int i = 0; i < c.probes; ++i) xs.push_back(-10.0 + 20.0 * i / (c.probes - 1));
    Rng rng(c.seed);
    for (int i = 0; i < 100; ++i) xs.push_back(rng.uniform(-10.0, 10.0));
    std::string csv = "x,J,defect,bound\n";
    double worst_excess = -1.0;
    for (long j : c.truncations) {
        if (j < 1) throw UsageError("--J entries must be positive");
        const double bound = 4.0 / (std::numbers::pi * std::numbers::pi * j) + 1e-12;
        for (double x : xs) {
            const double defect = sinc_partition_defect(x, j);
            worst_excess = std::max(worst_excess, defect - bound);
            csv += format_double(x) + "," + std::to_string(j) + "," + format_double(defect) + "," +
                   format_double(bound) + "\n";
        }
    }
    Outcome o{csv, worst_excess <= 0.0, {}};
    if (!o.passed) o.failure = {{"check", "sinc_partition"}, {"max_excess", worst_excess}};
    return o;
}

Outcome run_helton_howe(const RunConfig& c) {
    const Function2D phi = require_function(c.phi, "--phi");
    const Function2D psi = require_function(c.psi, "--psi");
    const auto ns = to_index(c.ns, "--N", 1);
    if (c.ratio < 2) throw UsageError("--ratio must be at least 2");
    if (c.quad_points < 1) throw UsageError("--quad must be positive");
    const double tol = c.tolerance.value_or(5e-2);
    ExperimentReport report = run_experiment(phi, psi, ns, c.ratio, c.quad_points);
    report.seed = c.seed;
    if (!c.out_path.empty()) write_report(report, c.out_path);

    bool monotone = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        if (report.rows[i].abs_error > report.rows[i - 1].abs_error + 1e-6) monotone = false;
    const double final_error = report.rows.back().abs_error;
    const double imag = report.max_lhs_imag();
    Outcome o{c.out_path.empty() ? report.to_csv() : std::string(), monotone && final_error <= tol && imag <= 1e-10,
              {}};
    if (!o.passed)
        o.failure = {{"check", "helton_howe"},
                     {"final_abs_error", final_error},
                     {"tolerance", tol},
                     {"monotone", monotone},
                     {"max_lhs_imag", imag}};
    return o;
}

}  // namespace

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.trials < 0) throw UsageError("--trials must be non-negative");
        Outcome o;
        if (c.subcommand == "doi") o = run_doi(c);
        else if (c.subcommand == "trioi-check") o = run_trioi_check(c);
        else if (c.subcommand == "commutator-check") o = run_commutator_check(c);
        else if (c.subcommand == "s1-bound") o = run_s1_bound(c);
        else if (c.subcommand == "besov") o = run_besov(c);
        else if (c.subcommand == "sinc-check") o = run_sinc_check(c);
        else if (c.subcommand == "helton-howe") o = run_helton_howe(c);
        else throw UsageError("unknown subcommand '" + c.subcommand + "'");

        if (c.subcommand != "helton-howe" || c.out_path.empty()) emit(c, o.payload, out);
        if (!o.passed) {
            nlohmann::json record = {{"status", "check_failed"}, {"subcommand", c.subcommand}};
            record["detail"] = o.failure;
            err << record.dump() << '\n';
            return check_failed;
        }
        if (!o.failure.is_null()) err << nlohmann::json{{"status", "ok"}, {"detail", o.failure}}.dump() << '\n';
        return ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const expr::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << nlohmann::json{{"status", "check_failed"}, {"subcommand", c.subcommand}, {"error", e.what()}}.dump()
            << '\n';
        return check_failed;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Functional calculus for almost commuting self-adjoint matrices"};
    app.set_config("--config", "", "TOML configuration file; command-line flags take precedence");
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);

    std::map<std::string, RunConfig> configs;
    auto add = [&](const std::string& name, const std::string& about) {
        RunConfig& c = configs[name];
        c.subcommand = name;
        CLI::App* sub = app.add_subcommand(name, about);
        sub->add_option("--out", c.out_path, "output file (default: standard output)");
        return std::pair<CLI::App*, RunConfig*>{sub, &c};
    };

    {
        auto [sub, c] = add("doi", "evaluate phi(A,B) as a double operator integral; prints matrix JSON");
        sub->add_option("--phi", c->phi, "function of x and y")->required();
        sub->add_option("--A", c->a_path, "matrix JSON file for A");
        sub->add_option("--B", c->b_path, "matrix JSON file for B");
        sub->add_option("--dim", c->dim, "dimension of random A, B when no files are given");
        sub->add_option("--seed", c->seed, "seed for random A, B");
        sub->add_option("--radius", c->radius, "declared radius of phi");
    }
    {
        auto [sub, c] = add("trioi-check", "compare the direct and duality triple-integral evaluators");
        c->dims = {2, 3, 4, 5, 6};
        c->trials = 25;
        sub->add_option("--dims", c->dims, "dimensions, cycled over trials")->delimiter(',');
        sub->add_option("--trials", c->trials, "number of trials");
        sub->add_option("--seed", c->seed, "base seed");
        sub->add_option("--tol", c->tolerance, "relative tolerance (default 1e-11)");
    }
    {
        auto [sub, c] = add("commutator-check", "check [phi(A,B),Q] against its triple-integral representation");
        sub->add_option("--dim", c->dim, "dimension");
        sub->add_option("--dims", c->dims, "dimensions, cycled over trials (overrides --dim)")->delimiter(',');
        sub->add_option("--trials", c->trials, "number of trials");
        sub->add_option("--seed", c->seed, "base seed");
        sub->add_option("--phi", c->phis, "test functions (default: built-in family)");
        sub->add_option("--psi", c->psi, "psi for --q psi (default: built-in family)");
        sub->add_option("--q", c->q_mode, "Q choice: random, psi, identity");
        sub->add_option("--tol", c->tolerance, "relative tolerance (default 1e-10)");
    }
    {
        auto [sub, c] = add("s1-bound", "sweep trace-norm ratios ||[phi(A,B),Q]||_1 / (||[A,Q]||_1 + ||[B,Q]||_1)");
        c->dims = {5, 10};
        c->trials = 100;
        sub->add_option("--dims", c->dims, "dimensions")->delimiter(',');
        sub->add_option("--trials", c->trials, "trials per function per dimension");
        sub->add_option("--seed", c->seed, "base seed");
        sub->add_option("--phi", c->phis, "test functions (default: bounded trigonometric family)");
        sub->add_option("--psi", c->psi, "psi for --q psi");
        sub->add_option("--q", c->q_mode, "Q choice: random, psi, identity");
    }
    {
        auto [sub, c] = add("besov", "Littlewood-Paley estimate of the B^1_{inf,1} norm; prints JSON");
        sub->add_option("--input", c->input_path, "grid file (JSON or binary)");
        sub->add_option("--phi", c->phi, "sample this function instead of reading a grid");
        sub->add_option("--G", c->grid_size, "grid points per side (power of two)");
        sub->add_option("--L", c->half_width, "grid covers [-L, L)^2");
        sub->add_option("--n-min", c->n_min, "lowest dyadic band");
        sub->add_option("--n-max", c->n_max, "highest dyadic band");
    }
    {
        auto [sub, c] = add("sinc-check", "check the sinc^2 partition of unity on [-10, 10]");
        sub->add_option("--J", c->truncations, "truncation levels")->delimiter(',');
        sub->add_option("--probes", c->probes, "uniform probe points (plus 100 seeded random points)");
        sub->add_option("--seed", c->seed, "seed for the random probes");
    }
    {
        auto [sub, c] = add("helton-howe", "trace formula experiment on truncated shifts");
        sub->add_option("--phi", c->phi, "phi(x, y)")->required();
        sub->add_option("--psi", c->psi, "psi(x, y)")->required();
        sub->add_option("--N", c->ns, "leading block sizes")->delimiter(',');
        sub->add_option("--ratio", c->ratio, "truncation size M = ratio * N");
        sub->add_option("--quad", c->quad_points, "radial Gauss-Legendre nodes");
        sub->add_option("--tol", c->tolerance, "tolerance on the last row's abs_error (default 5e-2)");
        sub->add_option("--seed", c->seed, "recorded in the report metadata");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }
    for (auto& [name, c] : configs)
        if (app.got_subcommand(name)) return dispatch(c, out, err);
    return usage_error;
}

}  // namespace opcalc::cli

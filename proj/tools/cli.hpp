#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace opcalc::cli {

/// Exit codes: 0 success, 1 a numerical check exceeded its tolerance,
/// 2 usage or I/O error.
enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

/// Parameters of one invocation. Defaults here are the documented defaults.
struct RunConfig {
    std::string subcommand;

    // Functions.
    std::string phi;
    std::string psi;
    std::vector<std::string> phis;  // trial families; empty = built-in family
    std::optional<double> radius;

    // Matrices / random inputs.
    std::string a_path;
    std::string b_path;
    long dim = 6;
    std::vector<long> dims;
    int trials = 20;
    std::uint64_t seed = 1;
    std::string q_mode = "random";  // random | psi | identity

    // Helton-Howe ladder.
    std::vector<long> ns{8, 16};
    long ratio = 4;
    int quad_points = 32;

    // Besov grid.
    std::string input_path;
    long grid_size = 256;
    double half_width = 8.0;
    std::optional<int> n_min;
    std::optional<int> n_max;

    // Sinc partition check.
    std::vector<long> truncations{100, 1000};
    int probes = 201;

    std::optional<double> tolerance;
    std::string out_path;  // empty = standard output
};

/// Validates `config` and runs its subcommand.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11, optional TOML config via --config) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opcalc::cli

#pragma once

// Matrix JSON format: {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
// Doubles are written in shortest round-trip form, so write/read is bit-exact.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "opcalc/linalg.hpp"

namespace opcalc {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m);
ComplexMatrix read_matrix(const std::filesystem::path& path);

/// Raised for unreadable/unwritable files; the message names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace opcalc

#include "opcalc/matrix_io.hpp"

#include <fstream>

namespace opcalc {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    require_square_finite(m, "matrix_to_json");
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json rr = nlohmann::json::array(), ri = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rr.push_back(m(i, j).real());
            ri.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    const auto n = j.at("dim").get<Eigen::Index>();
    if (n < 1) throw std::invalid_argument("matrix json: dim must be positive");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != static_cast<std::size_t>(n) || im.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("matrix json: row count does not match dim");
    ComplexMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (re[r].size() != static_cast<std::size_t>(n) || im[r].size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("matrix json: row " + std::to_string(r) + " has wrong length");
        for (Eigen::Index c = 0; c < n; ++c)
            m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
    require_square_finite(m, "matrix_from_json");
    return m;
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << matrix_to_json(m).dump() << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed matrix json in " + path.string() + ": " + e.what());
    }
    return matrix_from_json(j);
}

}  // namespace opcalc

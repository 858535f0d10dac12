#include "snash/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace snash {

RewardMatrix RewardMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw ConfigError("reward matrix must be non-empty");
    RewardMatrix m(rows.size(), rows.front().size());
    for (size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != m.cols())
            throw ConfigError("reward matrix rows have inconsistent lengths");
        for (size_t s = 0; s < m.cols(); ++s) m.at(k, s) = rows[k][s];
    }
    return m;
}

double RewardMatrix::min_entry() const {
    if (entries_.empty()) throw ConfigError("empty matrix");
    return *std::min_element(entries_.begin(), entries_.end());
}

double RewardMatrix::max_entry() const {
    if (entries_.empty()) throw ConfigError("empty matrix");
    return *std::max_element(entries_.begin(), entries_.end());
}

RewardMatrix normalize_matrix(const RewardMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw ConfigError("normalize_matrix: empty matrix");
    const double lo = m.min_entry();
    const double hi = m.max_entry();
    if (!(hi > lo)) throw ConfigError("normalize_matrix: degenerate (constant) matrix");
    RewardMatrix out(m.rows(), m.cols());
    const double scale = 1.0 / (hi - lo);
    for (size_t k = 0; k < m.rows(); ++k)
        for (size_t s = 0; s < m.cols(); ++s) out.at(k, s) = (m.at(k, s) - lo) * scale;
    out.set_normalization({scale, lo});
    return out;
}

RewardMatrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw IoError("bad numeric cell '" + cell + "' in " + path);
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError("matrix file is empty: " + path);
    return RewardMatrix::from_rows(rows);
}

void write_matrix_csv(const RewardMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write matrix file: " + path);
    for (size_t k = 0; k < m.rows(); ++k) {
        for (size_t s = 0; s < m.cols(); ++s) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", m.at(k, s));
            out << buf << (s + 1 < m.cols() ? "," : "");
        }
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace snash

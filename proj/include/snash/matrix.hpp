// Dense reward matrices (rows = policies, columns = scenarios) with an
// optional affine normalization record so raw values stay recoverable.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snash/errors.hpp"

namespace snash {

// entry_stored = (entry_raw - offset) * scale
struct AffineNormalization {
    double scale = 1.0;
    double offset = 0.0;
};

class RewardMatrix {
public:
    RewardMatrix() = default;
    RewardMatrix(size_t rows, size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    static RewardMatrix from_rows(const std::vector<std::vector<double>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    double& at(size_t k, size_t s) { return entries_[k * cols_ + s]; }
    double at(size_t k, size_t s) const { return entries_[k * cols_ + s]; }
    const std::vector<double>& entries() const { return entries_; }

    const std::optional<AffineNormalization>& normalization() const { return normalization_; }
    void set_normalization(AffineNormalization n) { normalization_ = n; }

    double min_entry() const;
    double max_entry() const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> entries_;
    std::optional<AffineNormalization> normalization_;
};

// Min-max map onto [0, 1]; throws ConfigError on constant or empty input.
RewardMatrix normalize_matrix(const RewardMatrix& m);

// Plain numeric CSV, no header: one row per policy.
RewardMatrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const RewardMatrix& m, const std::string& path);

}  // namespace snash

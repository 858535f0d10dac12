// Sparsity truncation of empirical play distributions and the end-to-end
// sparse-Nash pipeline producing a DecisionReport.
//
// Threshold rule: zeta = max_i (T p_i)^alpha / T. Entries >= zeta survive and
// are renormalized. When nothing is removed (non_sparse) or everything falls
// below the threshold (non_truncated), the original distribution is returned
// unchanged.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snash/bandit.hpp"
#include "snash/matrix.hpp"
#include "snash/oracle.hpp"
#include "snash/strategy.hpp"

namespace snash {

enum class TruncationStatus { truncated, non_truncated, non_sparse, not_applied };

std::string truncation_status_name(TruncationStatus s);

struct TruncationConfig {
    double alpha = 0.7;

    void validate() const;
};

struct TruncationResult {
    MixedStrategy strategy;
    TruncationStatus status = TruncationStatus::truncated;
    double threshold = 0.0;
};

TruncationResult truncate(const MixedStrategy& dist, uint64_t horizon, double alpha);

// self_play_nash followed by independent truncation of both empirical
// distributions (each side gets its own threshold).
struct TruncatedApproximation {
    NashApproximation base;
    MixedStrategy row;  // truncated empirical policy distribution
    MixedStrategy col;  // truncated empirical scenario distribution
    TruncationStatus row_status = TruncationStatus::truncated;
    TruncationStatus col_status = TruncationStatus::truncated;
};

TruncatedApproximation texp3p(const RewardOracle& game, const BanditConfig& cfg,
                              const TruncationConfig& trunc);

// Human-facing output of one solve: retained arms on both sides ranked by
// probability (ties by ascending index), the expected-reward submatrix over
// the retained pairs, and diagnostics.
struct DecisionReport {
    std::vector<SupportEntry> policies;   // ranked; defines submatrix row order
    std::vector<SupportEntry> scenarios;  // ranked; defines submatrix column order
    int64_t top_policy = 0;               // highest probability, lowest index on ties
    RewardMatrix submatrix;               // expected rewards, noise averaged out
    TruncationStatus row_status = TruncationStatus::truncated;
    TruncationStatus col_status = TruncationStatus::truncated;
    uint64_t horizon = 0;
    double alpha = 0.0;
    double value_estimate = 0.0;

    size_t sparsity() const { return policies.size(); }
};

DecisionReport snash_solve(const RewardOracle& game, const BanditConfig& cfg,
                           const TruncationConfig& trunc);

// Report assembly from an already-computed pair of recommendations.
DecisionReport make_decision_report(const RewardOracle& game, const MixedStrategy& row,
                                    const MixedStrategy& col, TruncationStatus row_status,
                                    TruncationStatus col_status, uint64_t horizon, double alpha,
                                    double value_estimate);

}  // namespace snash

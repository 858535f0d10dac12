#include "snash/truncation.hpp"

#include <cmath>

#include "snash/errors.hpp"

namespace snash {

std::string truncation_status_name(TruncationStatus s) {
    switch (s) {
        case TruncationStatus::truncated: return "truncated";
        case TruncationStatus::non_truncated: return "non-truncated";
        case TruncationStatus::non_sparse: return "non-sparse";
        case TruncationStatus::not_applied: return "not-applied";
    }
    return "unknown";
}

void TruncationConfig::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("alpha must be in (0, 1]");
}

TruncationResult truncate(const MixedStrategy& dist, uint64_t horizon, double alpha) {
    if (!dist.valid()) throw ConfigError("truncate: invalid distribution");
    if (horizon < 1) throw ConfigError("truncate: horizon must be positive");
    TruncationConfig{alpha}.validate();

    const double t = double(horizon);
    double zeta = 0.0;
    for (double p : dist.probabilities)
        if (p > 0.0) zeta = std::max(zeta, std::pow(t * p, alpha) / t);

    size_t kept = 0, removed = 0;
    double kept_mass = 0.0;
    for (double p : dist.probabilities) {
        if (p >= zeta && p > 0.0) {
            ++kept;
            kept_mass += p;
        } else if (p > 0.0) {
            ++removed;
        }
    }

    TruncationResult out;
    out.threshold = zeta;
    if (kept == 0) {
        out.status = TruncationStatus::non_truncated;
        out.strategy = dist;
        return out;
    }
    if (removed == 0) {
        out.status = TruncationStatus::non_sparse;
        out.strategy = dist;
        return out;
    }
    out.status = TruncationStatus::truncated;
    out.strategy.probabilities.assign(dist.size(), 0.0);
    const double inv = 1.0 / kept_mass;
    for (size_t i = 0; i < dist.size(); ++i)
        if (dist[i] >= zeta && dist[i] > 0.0) out.strategy.probabilities[i] = dist[i] * inv;
    return out;
}

TruncatedApproximation texp3p(const RewardOracle& game, const BanditConfig& cfg,
                              const TruncationConfig& trunc) {
    trunc.validate();
    TruncatedApproximation out;
    out.base = self_play_nash(game, cfg);
    TruncationResult row = truncate(out.base.empirical_row, cfg.horizon, trunc.alpha);
    TruncationResult col = truncate(out.base.empirical_col, cfg.horizon, trunc.alpha);
    out.row = std::move(row.strategy);
    out.col = std::move(col.strategy);
    out.row_status = row.status;
    out.col_status = col.status;
    return out;
}

DecisionReport make_decision_report(const RewardOracle& game, const MixedStrategy& row,
                                    const MixedStrategy& col, TruncationStatus row_status,
                                    TruncationStatus col_status, uint64_t horizon, double alpha,
                                    double value_estimate) {
    DecisionReport report;
    report.policies = strategy_support(row);
    report.scenarios = strategy_support(col);
    report.row_status = row_status;
    report.col_status = col_status;
    report.horizon = horizon;
    report.alpha = alpha;
    report.value_estimate = value_estimate;

    // strategy_support sorts by probability descending with ascending-index
    // tie break, so the first entry is the emphasized policy.
    report.top_policy = report.policies.front().arm;

    report.submatrix = RewardMatrix(report.policies.size(), report.scenarios.size());
    for (size_t i = 0; i < report.policies.size(); ++i)
        for (size_t j = 0; j < report.scenarios.size(); ++j)
            report.submatrix.at(i, j) =
                game.expected(report.policies[i].arm, report.scenarios[j].arm);
    return report;
}

DecisionReport snash_solve(const RewardOracle& game, const BanditConfig& cfg,
                           const TruncationConfig& trunc) {
    TruncatedApproximation t = texp3p(game, cfg, trunc);
    return make_decision_report(game, t.row, t.col, t.row_status, t.col_status, cfg.horizon,
                                trunc.alpha, t.base.value_estimate);
}

}  // namespace snash

// Classical decision criteria (Wald, Savage), exploitability, robust scores
// and an exact small-game equilibrium oracle used to validate the bandit.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snash/matrix.hpp"
#include "snash/strategy.hpp"

namespace snash {

struct CriterionResult {
    double value = 0.0;
    std::vector<int64_t> policies;  // all tied optima, ascending
    int64_t primary = 0;            // lowest tied index
    std::optional<RewardMatrix> regret;  // present for Savage
};

// max over pure policies of the worst-scenario reward.
CriterionResult wald(const RewardMatrix& m);

// regret(k, s) = max_k' R(k', s) - R(k, s); non-negative, zero somewhere in
// every column.
RewardMatrix regret_matrix(const RewardMatrix& m);

// min over pure policies of the worst-scenario regret.
CriterionResult savage(const RewardMatrix& m);

struct ExactEquilibrium {
    MixedStrategy row;
    MixedStrategy col;
    double value = 0.0;
    std::string method = "support-enumeration";
};

// Exhaustive support enumeration; both dimensions must be at most
// kExactNashMaxDim. An equilibrium always exists for finite zero-sum games.
inline constexpr size_t kExactNashMaxDim = 8;
ExactEquilibrium exact_nash_small(const RewardMatrix& m);

// Nash value minus the worst-scenario expected reward of p. Non-negative up
// to tolerance; zero exactly at Nash strategies. When nash_value is not
// supplied it is computed with exact_nash_small.
double exploitability(const RewardMatrix& m, const MixedStrategy& p,
                      std::optional<double> nash_value = std::nullopt);

// Worst expected reward of the mix over pure scenarios: min_s E_p R(., s).
double robust_score(const RewardMatrix& m, const MixedStrategy& p);

// Cohort-relative gaps: score_i - min(scores). The best entry maps to 0.
std::vector<double> proxy_exploitability(const std::vector<double>& robust_scores);

// Best-response sandwich around the true game value:
//   lower = min_s E_p R(., s)   <=  v  <=   upper = max_k E_q R(k, .)
std::pair<double, double> nash_value_upper_lower(const RewardMatrix& m, const MixedStrategy& p,
                                                 const MixedStrategy& q);

}  // namespace snash

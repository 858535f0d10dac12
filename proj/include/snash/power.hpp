// Synthetic power-investment benchmark game.
//
// Policies are 10-component ternary vectors (what to build), scenarios are
// 9-component ternary vectors (what Nature does). The base reward is a fixed
// closed-form expression scaled by a (2/3)(1+u) noise prefactor with
// u ~ Uniform[0,1), whose mean is exactly 1; the modified variant adds a
// deterministic match/mismatch bonus outside of the prefactor.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "snash/oracle.hpp"
#include "snash/rng.hpp"
#include "snash/strategy.hpp"
#include "snash/ternary.hpp"

namespace snash {

struct PolicyVector {
    double coal = 0;           // C
    double fission = 0;        // F
    double fusion = 0;         // X
    double supergrids = 0;     // S
    double wind = 0;           // W
    double pv = 0;             // P
    double solar_thermal = 0;  // T
    double unconventional = 0; // U
    double nanogrids = 0;      // N
    double storage = 0;        // A, Scandinavian storage

    static PolicyVector from_ternary(const TernaryVector& v);
    TernaryVector to_ternary() const;
    static constexpr int kComponents = 10;
};

struct ScenarioVector {
    double geopolitical = 0;       // Z
    double wind_break = 0;         // WB
    double pv_break = 0;           // PB
    double solar_break = 0;        // TB
    double fusion_break = 0;       // XB
    double unconventional_break = 0;  // UB
    double storage_break = 0;      // SB
    double climate_disaster = 0;   // CC
    double nuclear_terrorism = 0;  // NT

    static ScenarioVector from_ternary(const TernaryVector& v);
    TernaryVector to_ternary() const;
    static constexpr int kComponents = 9;
};

enum class NoiseMode { stochastic, expected };
enum class PowerVariant { base, modified };

struct PowerModelConfig {
    double cost = 1.0;          // build-cost meta-parameter
    double bonus_weight = 1.0;  // c, weight of the modified variant's bonus
    NoiseMode noise = NoiseMode::stochastic;
    bool neq_as_eq = false;     // read the two mismatch indicators as matches

    void validate() const;
};

// Noise-free core of the reward expression.
double base_reward_core(const PolicyVector& k, const ScenarioVector& s, double cost);

// Core scaled by (2/3)(1+u) in stochastic mode, by 1 in expected mode.
double base_reward(const PolicyVector& k, const ScenarioVector& s, const PowerModelConfig& cfg,
                   Rng& rng);

// base_reward plus bonus_weight * (#matching/mismatching indicator pairs).
double modified_reward(const PolicyVector& k, const ScenarioVector& s,
                       const PowerModelConfig& cfg, Rng& rng);

// Deterministic indicator sum in [0, 4] (unweighted).
double indicator_sum(const PolicyVector& k, const ScenarioVector& s, bool neq_as_eq);

class PowerOracle final : public RewardOracle {
public:
    PowerOracle(PowerModelConfig cfg, PowerVariant variant, bool normalize = false);

    int64_t num_policies() const override { return kNumPolicies; }
    int64_t num_scenarios() const override { return kNumScenarios; }
    RewardBounds bounds() const override;
    double sample(int64_t k, int64_t s, Rng& rng) const override;
    double expected(int64_t k, int64_t s) const override;

    // Expected rewards of one policy mix against a batch of scenario columns,
    // computed through the bilinear feature decomposition of the core.
    std::vector<double> expected_mix_columns(const std::vector<SupportEntry>& mix,
                                             const std::vector<int64_t>& columns) const;

    PolicyVector policy(int64_t k) const;
    ScenarioVector scenario(int64_t s) const;
    RewardBounds raw_bounds() const { return raw_bounds_; }
    bool normalized() const { return normalize_; }
    const PowerModelConfig& config() const { return cfg_; }
    PowerVariant variant() const { return variant_; }

    static constexpr int64_t kNumPolicies = 59049;   // 3^10
    static constexpr int64_t kNumScenarios = 19683;  // 3^9

private:
    double raw_expected(int64_t k, int64_t s) const;
    double maybe_normalize(double raw) const;

    PowerModelConfig cfg_;
    PowerVariant variant_;
    bool normalize_;
    RewardBounds raw_bounds_;
    std::vector<uint8_t> policy_digits_;    // kNumPolicies x 10
    std::vector<uint8_t> scenario_digits_;  // kNumScenarios x 9
};

std::shared_ptr<PowerOracle> power_game(const PowerModelConfig& cfg, PowerVariant variant,
                                        bool normalize = false);

}  // namespace snash

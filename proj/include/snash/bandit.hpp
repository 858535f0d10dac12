// Exp3.P adversarial bandit and two-bandit self-play.
//
// The update follows the exponential-weights recurrence with importance
// weighting and a per-arm exploration bonus applied to every arm at every
// step:
//
//   p_i    = (1-gamma) * w_i / sum_j w_j + gamma/K
//   Rhat_i = r/p_i for the played arm, 0 otherwise       (r scaled into [0,1])
//   w_i   <- w_i * exp( (gamma/(3K)) * (Rhat_i + eta / (p_i * sqrt(T K))) )
//
// Weights only grow, so long runs overflow double range; the engine stores
// weights rescaled by a power of two (tracked in renorm_exp2) whenever the
// total passes 2^500. Rescaling by a power of two is exact, so sampling
// probabilities are unaffected. True log-weights remain available through
// state().

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "snash/kernels.hpp"
#include "snash/oracle.hpp"
#include "snash/rng.hpp"
#include "snash/strategy.hpp"

namespace snash {

enum class Parametrization { practical, theoretical };

// Table-driven parametrization of Exp3.P:
//   eta   = 2 sqrt(log(K T / epsilon))
//   gamma = min(0.6, 2 sqrt(3 K log K / (5 T)))
// Natural logarithms. Throws ConfigError when K < 2 or K*T/epsilon <= 1.
std::pair<double, double> theoretical_params(int64_t num_arms, uint64_t horizon, double epsilon);

struct BanditConfig {
    uint64_t horizon = 1;
    double eta = 0.3;
    double gamma = 0.15;
    double epsilon = 1e-6;
    uint64_t seed = 1;
    Parametrization parametrization = Parametrization::practical;
    kernels::KernelChoice kernel = kernels::KernelChoice::automatic;

    static BanditConfig practical(uint64_t horizon, uint64_t seed) {
        BanditConfig c;
        c.horizon = horizon;
        c.seed = seed;
        return c;
    }

    static BanditConfig theoretical(uint64_t horizon, uint64_t seed) {
        BanditConfig c = practical(horizon, seed);
        c.parametrization = Parametrization::theoretical;
        return c;
    }

    void validate() const;
};

// Materialized snapshot of the bandit state.
struct Exp3PState {
    std::vector<double> log_weights;  // natural log of the true weights
    MixedStrategy sampling;           // p derived from the current weights
    std::vector<uint64_t> play_counts;
    uint64_t steps = 0;
};

class Exp3P {
public:
    Exp3P(int64_t num_arms, const BanditConfig& cfg);

    int64_t num_arms() const { return num_arms_; }
    double eta() const { return eta_; }
    double gamma() const { return gamma_; }
    uint64_t steps() const { return steps_; }
    std::string kernel_name() const { return kernel_name_; }

    // Draw the next arm from the current sampling distribution. Consumes
    // exactly two Rng draws.
    int64_t sample(Rng& rng);

    // Apply one update for the played arm. reward01 must lie in [0, 1].
    void update(int64_t arm, double reward01);

    Exp3PState state() const;
    MixedStrategy sampling_distribution() const;
    MixedStrategy empirical_frequencies() const;  // play counts / steps

private:
    void renormalize();

    int64_t num_arms_;
    uint64_t horizon_;
    double eta_ = 0.0;
    double gamma_ = 0.0;
    double mix_ = 0.0;           // 1 - gamma
    double floor_ = 0.0;         // gamma / K
    double bonus_ = 0.0;         // (gamma/(3K)) * eta / sqrt(T K)
    double reward_coeff_ = 0.0;  // gamma / (3K)
    size_t padded_ = 0;
    std::vector<double> weights_;     // power-of-two rescaled, padded with zeros
    std::vector<double> block_sums_;  // per kernels::kBlock chunk
    double total_ = 0.0;
    int64_t renorm_exp2_ = 0;
    std::vector<uint64_t> play_counts_;
    uint64_t steps_ = 0;
    kernels::SweepFn sweep_ = nullptr;
    std::string kernel_name_;
};

// Runs T steps against a reward function (arm, noise stream) -> [0,1].
// Returns the final sampling distribution and the empirical play frequencies;
// the empirical distribution is the recommended strategy.
std::pair<MixedStrategy, MixedStrategy> run_exp3p(
    int64_t num_arms, const BanditConfig& cfg,
    const std::function<double(int64_t, Rng&)>& reward01_fn);

struct NashApproximation {
    MixedStrategy final_row;       // final sampling distribution over policies
    MixedStrategy final_col;       // final sampling distribution over scenarios
    MixedStrategy empirical_row;   // play frequencies (the recommendation)
    MixedStrategy empirical_col;
    double value_estimate = 0.0;   // mean raw reward over the T joint plays
    uint64_t horizon = 0;
};

// Two Exp3.P instances sharing one step counter: the policy side receives the
// [0,1]-scaled reward, the scenario side its reflection 1 - r. One oracle
// call per joint step.
NashApproximation self_play_nash(const RewardOracle& game, const BanditConfig& cfg);

}  // namespace snash

#include "snash/bandit.hpp"

#include <cfloat>
#include <cmath>

#include "snash/errors.hpp"

namespace snash {

namespace {
constexpr double kRenormThreshold = 0x1.0p500;
constexpr double kMaxInitExponent = 700.0;  // exp() overflows past ~709
constexpr double kLn2 = 0.6931471805599453;
}  // namespace

std::pair<double, double> theoretical_params(int64_t num_arms, uint64_t horizon, double epsilon) {
    if (num_arms < 2) throw ConfigError("theoretical parametrization needs at least 2 arms");
    if (horizon < 1) throw ConfigError("horizon must be positive");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    const double ratio = double(num_arms) * double(horizon) / epsilon;
    if (!(ratio > 1.0)) throw ConfigError("invalid parameters: K*T/epsilon must exceed 1");
    const double eta = 2.0 * std::sqrt(std::log(ratio));
    const double gamma = std::min(
        0.6, 2.0 * std::sqrt(3.0 * double(num_arms) * std::log(double(num_arms)) /
                             (5.0 * double(horizon))));
    return {eta, gamma};
}

void BanditConfig::validate() const {
    if (horizon < 1) throw ConfigError("horizon must be positive");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    if (parametrization == Parametrization::practical) {
        if (!(eta > 0.0)) throw ConfigError("eta must be positive");
        if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("gamma must be in (0, 1]");
    }
}

Exp3P::Exp3P(int64_t num_arms, const BanditConfig& cfg) : num_arms_(num_arms) {
    if (num_arms < 1) throw ConfigError("arm count must be positive");
    cfg.validate();
    horizon_ = cfg.horizon;
    play_counts_.assign(size_t(num_arms), 0);

    if (num_arms == 1) {
        // Degenerate bandit: the sampling distribution is identically (1.0).
        weights_.assign(kernels::kBlock, 0.0);
        weights_[0] = 1.0;
        block_sums_.assign(1, 1.0);
        total_ = 1.0;
        padded_ = kernels::kBlock;
        kernel_name_ = "none";
        return;
    }

    if (cfg.parametrization == Parametrization::theoretical) {
        std::tie(eta_, gamma_) = theoretical_params(num_arms, horizon_, cfg.epsilon);
    } else {
        eta_ = cfg.eta;
        gamma_ = cfg.gamma;
    }
    const double k = double(num_arms);
    const double t = double(horizon_);
    mix_ = 1.0 - gamma_;
    floor_ = gamma_ / k;
    reward_coeff_ = gamma_ / (3.0 * k);
    bonus_ = reward_coeff_ * eta_ / std::sqrt(t * k);

    const double init_exponent = (eta_ * gamma_ / 3.0) * std::sqrt(t / k);
    if (init_exponent > kMaxInitExponent)
        throw ConfigError("parametrization overflows initial weights: exp(" +
                          std::to_string(init_exponent) + ")");
    const double w0 = std::exp(init_exponent);

    padded_ = (size_t(num_arms) + kernels::kBlock - 1) / kernels::kBlock * kernels::kBlock;
    weights_.assign(padded_, 0.0);
    for (size_t i = 0; i < size_t(num_arms); ++i) weights_[i] = w0;
    block_sums_.assign(padded_ / kernels::kBlock, 0.0);
    total_ = 0.0;
    for (size_t b = 0; b < block_sums_.size(); ++b) {
        const size_t lo = b * kernels::kBlock;
        const size_t in_block = std::min(size_t(num_arms) - std::min(size_t(num_arms), lo),
                                         kernels::kBlock);
        block_sums_[b] = double(in_block) * w0;
        total_ += block_sums_[b];
    }

    // Worst-case per-arm bonus exponent is eta / (3 sqrt(T K)), reached at
    // the exploration floor.
    const double max_exponent = bonus_ / floor_;
    sweep_ = kernels::select_sweep(max_exponent, cfg.kernel);
    kernel_name_ = kernels::selected_sweep_name(max_exponent, cfg.kernel);
}

int64_t Exp3P::sample(Rng& rng) {
    if (num_arms_ == 1) {
        rng.next_u64();
        rng.next_u64();
        return 0;
    }
    const double branch = rng.next_double();
    if (branch < gamma_) return int64_t(rng.next_below(uint64_t(num_arms_)));

    const double target = rng.next_double() * total_;
    double acc = 0.0;
    size_t block = 0;
    for (; block + 1 < block_sums_.size(); ++block) {
        if (acc + block_sums_[block] > target) break;
        acc += block_sums_[block];
    }
    for (size_t i = block * kernels::kBlock; i < padded_; ++i) {
        acc += weights_[i];
        if (acc > target) return int64_t(std::min(i, size_t(num_arms_ - 1)));
    }
    return num_arms_ - 1;  // rounding slack at the very top of the CDF
}

void Exp3P::update(int64_t arm, double reward01) {
    if (arm < 0 || arm >= num_arms_) throw ConfigError("arm index out of range");
    if (!(reward01 >= 0.0 && reward01 <= 1.0))
        throw NumericError("reward outside [0, 1]: " + std::to_string(reward01));

    if (num_arms_ > 1) {
        const double inv_total = 1.0 / total_;
        const double p_arm = std::fma(mix_, weights_[size_t(arm)] * inv_total, floor_);

        total_ = sweep_(weights_.data(), padded_,
                        {inv_total, mix_, floor_, bonus_}, block_sums_.data());

        // The played arm additionally gains exp((gamma/3K) * reward/p).
        const double factor = std::exp(reward_coeff_ * reward01 / p_arm);
        const double before = weights_[size_t(arm)];
        const double after = before * factor;
        weights_[size_t(arm)] = after;
        const double delta = after - before;
        total_ += delta;
        block_sums_[size_t(arm) / kernels::kBlock] += delta;

        if (total_ > kRenormThreshold) renormalize();
        if (!std::isfinite(total_) || !(total_ > 0.0))
            throw NumericError("non-finite weight total after update");
    }

    ++play_counts_[size_t(arm)];
    ++steps_;
}

void Exp3P::renormalize() {
    const int e = std::ilogb(total_);
    const double scale = std::ldexp(1.0, -e);
    for (double& w : weights_) w *= scale;
    // Keep true arms strictly positive; relative weights this small are
    // behaviorally indistinguishable from the exploration floor anyway.
    for (size_t i = 0; i < size_t(num_arms_); ++i)
        if (weights_[i] < DBL_MIN) weights_[i] = DBL_MIN;
    for (double& b : block_sums_) b *= scale;
    total_ *= scale;
    renorm_exp2_ += e;
}

Exp3PState Exp3P::state() const {
    Exp3PState s;
    s.steps = steps_;
    s.play_counts = play_counts_;
    s.log_weights.resize(size_t(num_arms_));
    for (size_t i = 0; i < size_t(num_arms_); ++i)
        s.log_weights[i] = std::log(weights_[i]) + double(renorm_exp2_) * kLn2;
    s.sampling = sampling_distribution();
    return s;
}

MixedStrategy Exp3P::sampling_distribution() const {
    MixedStrategy p{std::vector<double>(size_t(num_arms_), 0.0)};
    if (num_arms_ == 1) {
        p.probabilities[0] = 1.0;
        return p;
    }
    double total = 0.0;
    for (size_t i = 0; i < size_t(num_arms_); ++i) total += weights_[i];
    const double inv = 1.0 / total;
    for (size_t i = 0; i < size_t(num_arms_); ++i)
        p.probabilities[i] = std::fma(mix_, weights_[i] * inv, floor_);
    return p;
}

MixedStrategy Exp3P::empirical_frequencies() const {
    if (steps_ == 0) throw ConfigError("no plays recorded yet");
    MixedStrategy p{std::vector<double>(size_t(num_arms_), 0.0)};
    const double inv = 1.0 / double(steps_);
    for (size_t i = 0; i < size_t(num_arms_); ++i)
        p.probabilities[i] = double(play_counts_[i]) * inv;
    return p;
}

std::pair<MixedStrategy, MixedStrategy> run_exp3p(
    int64_t num_arms, const BanditConfig& cfg,
    const std::function<double(int64_t, Rng&)>& reward01_fn) {
    Exp3P bandit(num_arms, cfg);
    Rng rng(cfg.seed);
    for (uint64_t t = 0; t < cfg.horizon; ++t) {
        const int64_t arm = bandit.sample(rng);
        const double r = reward01_fn(arm, rng);
        bandit.update(arm, r);
    }
    return {bandit.sampling_distribution(), bandit.empirical_frequencies()};
}

NashApproximation self_play_nash(const RewardOracle& game, const BanditConfig& cfg) {
    cfg.validate();
    const RewardBounds bounds = game.bounds();
    if (!(bounds.width() > 0.0))
        throw ConfigError("degenerate game: reward bounds have zero width");
    const double inv_width = 1.0 / bounds.width();

    Exp3P row(game.num_policies(), cfg);
    Exp3P col(game.num_scenarios(), cfg);
    Rng rng(cfg.seed);

    double value_acc = 0.0;
    for (uint64_t t = 0; t < cfg.horizon; ++t) {
        const int64_t k = row.sample(rng);
        const int64_t s = col.sample(rng);
        const double raw = game.sample(k, s, rng);
        const double scaled = (raw - bounds.lo) * inv_width;
        row.update(k, scaled);
        col.update(s, 1.0 - scaled);
        value_acc += raw;
    }

    NashApproximation out;
    out.final_row = row.sampling_distribution();
    out.final_col = col.sampling_distribution();
    out.empirical_row = row.empirical_frequencies();
    out.empirical_col = col.empirical_frequencies();
    out.value_estimate = value_acc / double(cfg.horizon);
    out.horizon = cfg.horizon;
    return out;
}

}  // namespace snash

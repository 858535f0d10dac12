// Game description consumed by the solvers: sizes, reward bounds and the
// (policy, scenario, noise stream) -> reward map. Oracles are immutable and
// safe to evaluate concurrently as long as each caller owns its Rng.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "snash/matrix.hpp"
#include "snash/rng.hpp"

namespace snash {

struct RewardBounds {
    double lo = 0.0;
    double hi = 1.0;

    double width() const { return hi - lo; }
};

class RewardOracle {
public:
    virtual ~RewardOracle() = default;

    virtual int64_t num_policies() const = 0;
    virtual int64_t num_scenarios() const = 0;

    // Interval known to contain every achievable reward.
    virtual RewardBounds bounds() const = 0;

    // One (possibly noisy) play. Deterministic given the stream state.
    virtual double sample(int64_t policy, int64_t scenario, Rng& rng) const = 0;

    // Noise-free expected reward.
    virtual double expected(int64_t policy, int64_t scenario) const = 0;

    // Expected reward of a weighted policy mix against one scenario column.
    // Generic implementation; subclasses may override with something faster.
    virtual double expected_mix(const std::vector<std::pair<int64_t, double>>& mix,
                                int64_t scenario) const {
        double acc = 0.0;
        for (const auto& [k, w] : mix) acc += w * expected(k, scenario);
        return acc;
    }
};

// Explicit-matrix game; rewards are deterministic matrix entries.
class MatrixOracle final : public RewardOracle {
public:
    explicit MatrixOracle(RewardMatrix m) : m_(std::move(m)) {
        lo_ = m_.min_entry();
        hi_ = m_.max_entry();
    }

    int64_t num_policies() const override { return int64_t(m_.rows()); }
    int64_t num_scenarios() const override { return int64_t(m_.cols()); }
    RewardBounds bounds() const override { return {lo_, hi_}; }
    double sample(int64_t k, int64_t s, Rng&) const override {
        return m_.at(size_t(k), size_t(s));
    }
    double expected(int64_t k, int64_t s) const override { return m_.at(size_t(k), size_t(s)); }

    const RewardMatrix& matrix() const { return m_; }

private:
    RewardMatrix m_;
    double lo_, hi_;
};

}  // namespace snash

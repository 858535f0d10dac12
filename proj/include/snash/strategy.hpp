// Mixed strategies: probability vectors over arms.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "snash/errors.hpp"
#include "snash/rng.hpp"

namespace snash {

inline constexpr double kProbabilitySumTol = 1e-9;

struct MixedStrategy {
    std::vector<double> probabilities;

    size_t size() const { return probabilities.size(); }
    double operator[](size_t i) const { return probabilities[i]; }

    bool valid(double tol = kProbabilitySumTol) const {
        double sum = 0.0;
        for (double p : probabilities) {
            if (!(p >= 0.0) || !std::isfinite(p)) return false;
            sum += p;
        }
        return !probabilities.empty() && std::fabs(sum - 1.0) <= tol;
    }

    static MixedStrategy uniform(size_t n) {
        return MixedStrategy{std::vector<double>(n, 1.0 / double(n))};
    }

    static MixedStrategy pure(size_t n, size_t arm) {
        MixedStrategy s{std::vector<double>(n, 0.0)};
        s.probabilities[arm] = 1.0;
        return s;
    }
};

struct SupportEntry {
    int64_t arm;
    double probability;

    bool operator==(const SupportEntry&) const = default;
};

// Arms with positive probability, sorted by probability descending; ties
// broken by ascending arm index.
inline std::vector<SupportEntry> strategy_support(const MixedStrategy& p) {
    if (!p.valid()) throw ConfigError("strategy_support: invalid mixed strategy");
    std::vector<SupportEntry> out;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) out.push_back({int64_t(i), p[i]});
    std::stable_sort(out.begin(), out.end(), [](const SupportEntry& a, const SupportEntry& b) {
        if (a.probability != b.probability) return a.probability > b.probability;
        return a.arm < b.arm;
    });
    return out;
}

// Inverse-CDF draw. Cumulative rounding is absorbed by the final clamp.
inline size_t sample_strategy(const MixedStrategy& p, Rng& rng) {
    const double target = rng.next_double();
    double acc = 0.0;
    size_t last_positive = 0;
    bool seen = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        acc += p[i];
        last_positive = i;
        seen = true;
        if (acc > target) return i;
    }
    if (!seen) throw ConfigError("sample_strategy: empty strategy");
    return last_positive;
}

inline double l1_distance(const MixedStrategy& a, const MixedStrategy& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d += std::fabs(a[i] - b[i]);
    return d;
}

}  // namespace snash

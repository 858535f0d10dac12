#include "snash/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "snash/errors.hpp"

namespace snash {

namespace {

void require_nonempty(const RewardMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw ConfigError("matrix must be non-empty");
}

CriterionResult pick_optima(const std::vector<double>& row_scores, bool maximize) {
    CriterionResult r;
    r.value = maximize ? *std::max_element(row_scores.begin(), row_scores.end())
                       : *std::min_element(row_scores.begin(), row_scores.end());
    for (size_t k = 0; k < row_scores.size(); ++k)
        if (row_scores[k] == r.value) r.policies.push_back(int64_t(k));
    r.primary = r.policies.front();
    return r;
}

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < 1e-12) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (size_t col = n; col-- > 0;) {
        double acc = b[col];
        for (size_t c = col + 1; c < n; ++c) acc -= a[col][c] * b[c];
        b[col] = acc / a[col][col];
    }
    return true;
}

// Next k-combination over {0..n-1} in lexicographic order.
bool next_combination(std::vector<size_t>& idx, size_t n) {
    const size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct Candidate {
    MixedStrategy row, col;
    double value = 0.0;
    double violation = std::numeric_limits<double>::infinity();
};

// Solves the indifference system for one square support pair and measures
// how badly the candidate violates equilibrium conditions.
bool try_support(const RewardMatrix& m, const std::vector<size_t>& rows,
                 const std::vector<size_t>& cols, Candidate& out) {
    const size_t sz = rows.size();
    const size_t big_k = m.rows();
    const size_t big_s = m.cols();

    // Unknowns (q_j, v): every supported row is indifferent, sum q = 1.
    std::vector<std::vector<double>> a(sz + 1, std::vector<double>(sz + 1, 0.0));
    std::vector<double> b(sz + 1, 0.0);
    for (size_t i = 0; i < sz; ++i) {
        for (size_t j = 0; j < sz; ++j) a[i][j] = m.at(rows[i], cols[j]);
        a[i][sz] = -1.0;
    }
    for (size_t j = 0; j < sz; ++j) a[sz][j] = 1.0;
    b[sz] = 1.0;
    if (!solve_linear(a, b)) return false;
    std::vector<double> q(b.begin(), b.begin() + long(sz));
    const double value = b[sz];

    // Unknowns (p_i, v'): every supported column is indifferent.
    std::vector<std::vector<double>> at(sz + 1, std::vector<double>(sz + 1, 0.0));
    std::vector<double> bt(sz + 1, 0.0);
    for (size_t j = 0; j < sz; ++j) {
        for (size_t i = 0; i < sz; ++i) at[j][i] = m.at(rows[i], cols[j]);
        at[j][sz] = -1.0;
    }
    for (size_t i = 0; i < sz; ++i) at[sz][i] = 1.0;
    bt[sz] = 1.0;
    if (!solve_linear(at, bt)) return false;
    std::vector<double> p(bt.begin(), bt.begin() + long(sz));

    double violation = std::fabs(bt[sz] - value);
    for (double x : p) violation = std::max(violation, -x);
    for (double x : q) violation = std::max(violation, -x);

    MixedStrategy full_p{std::vector<double>(big_k, 0.0)};
    MixedStrategy full_q{std::vector<double>(big_s, 0.0)};
    for (size_t i = 0; i < sz; ++i) full_p.probabilities[rows[i]] = std::max(0.0, p[i]);
    for (size_t j = 0; j < sz; ++j) full_q.probabilities[cols[j]] = std::max(0.0, q[j]);
    double mass_p = 0.0, mass_q = 0.0;
    for (double x : full_p.probabilities) mass_p += x;
    for (double x : full_q.probabilities) mass_q += x;
    if (!(mass_p > 0.0) || !(mass_q > 0.0)) return false;
    for (double& x : full_p.probabilities) x /= mass_p;
    for (double& x : full_q.probabilities) x /= mass_q;

    // No profitable deviation: rows cannot beat v against q, columns cannot
    // push below v against p.
    for (size_t k = 0; k < big_k; ++k) {
        double e = 0.0;
        for (size_t j = 0; j < sz; ++j) e += full_q.probabilities[cols[j]] * m.at(k, cols[j]);
        violation = std::max(violation, e - value);
    }
    for (size_t s = 0; s < big_s; ++s) {
        double e = 0.0;
        for (size_t i = 0; i < sz; ++i) e += full_p.probabilities[rows[i]] * m.at(rows[i], s);
        violation = std::max(violation, value - e);
    }

    out.row = std::move(full_p);
    out.col = std::move(full_q);
    out.value = value;
    out.violation = violation;
    return true;
}

}  // namespace

CriterionResult wald(const RewardMatrix& m) {
    require_nonempty(m);
    std::vector<double> row_min(m.rows());
    for (size_t k = 0; k < m.rows(); ++k) {
        double lo = m.at(k, 0);
        for (size_t s = 1; s < m.cols(); ++s) lo = std::min(lo, m.at(k, s));
        row_min[k] = lo;
    }
    return pick_optima(row_min, /*maximize=*/true);
}

RewardMatrix regret_matrix(const RewardMatrix& m) {
    require_nonempty(m);
    RewardMatrix r(m.rows(), m.cols());
    for (size_t s = 0; s < m.cols(); ++s) {
        double hi = m.at(0, s);
        for (size_t k = 1; k < m.rows(); ++k) hi = std::max(hi, m.at(k, s));
        for (size_t k = 0; k < m.rows(); ++k) r.at(k, s) = hi - m.at(k, s);
    }
    return r;
}

CriterionResult savage(const RewardMatrix& m) {
    RewardMatrix reg = regret_matrix(m);
    std::vector<double> row_max(reg.rows());
    for (size_t k = 0; k < reg.rows(); ++k) {
        double hi = reg.at(k, 0);
        for (size_t s = 1; s < reg.cols(); ++s) hi = std::max(hi, reg.at(k, s));
        row_max[k] = hi;
    }
    CriterionResult r = pick_optima(row_max, /*maximize=*/false);
    r.regret = std::move(reg);
    return r;
}

ExactEquilibrium exact_nash_small(const RewardMatrix& m) {
    require_nonempty(m);
    if (m.rows() > kExactNashMaxDim || m.cols() > kExactNashMaxDim)
        throw ConfigError("exact_nash_small: dimensions exceed enumeration limit");

    constexpr double kAcceptTol = 1e-10;
    Candidate best;

    const size_t max_sz = std::min(m.rows(), m.cols());
    for (size_t sz = 1; sz <= max_sz; ++sz) {
        std::vector<size_t> rows(sz);
        for (size_t i = 0; i < sz; ++i) rows[i] = i;
        do {
            std::vector<size_t> cols(sz);
            for (size_t i = 0; i < sz; ++i) cols[i] = i;
            do {
                Candidate cand;
                if (!try_support(m, rows, cols, cand)) continue;
                if (cand.violation < best.violation) best = cand;
                if (best.violation <= kAcceptTol) {
                    ExactEquilibrium eq;
                    eq.row = std::move(best.row);
                    eq.col = std::move(best.col);
                    eq.value = best.value;
                    return eq;
                }
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
    }

    if (!std::isfinite(best.violation))
        throw NumericError("exact_nash_small: no solvable support system");
    ExactEquilibrium eq;  // best-effort: smallest-violation candidate
    eq.row = std::move(best.row);
    eq.col = std::move(best.col);
    eq.value = best.value;
    return eq;
}

double exploitability(const RewardMatrix& m, const MixedStrategy& p,
                      std::optional<double> nash_value) {
    require_nonempty(m);
    if (p.size() != m.rows()) throw ConfigError("exploitability: dimension mismatch");
    const double v = nash_value ? *nash_value : exact_nash_small(m).value;
    return v - robust_score(m, p);
}

double robust_score(const RewardMatrix& m, const MixedStrategy& p) {
    require_nonempty(m);
    if (p.size() != m.rows()) throw ConfigError("robust_score: dimension mismatch");
    double worst = std::numeric_limits<double>::infinity();
    for (size_t s = 0; s < m.cols(); ++s) {
        double e = 0.0;
        for (size_t k = 0; k < m.rows(); ++k) e += p[k] * m.at(k, s);
        worst = std::min(worst, e);
    }
    return worst;
}

std::vector<double> proxy_exploitability(const std::vector<double>& robust_scores) {
    if (robust_scores.empty()) throw ConfigError("proxy_exploitability: empty cohort");
    const double best = *std::min_element(robust_scores.begin(), robust_scores.end());
    std::vector<double> out(robust_scores.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = robust_scores[i] - best;
    return out;
}

std::pair<double, double> nash_value_upper_lower(const RewardMatrix& m, const MixedStrategy& p,
                                                 const MixedStrategy& q) {
    require_nonempty(m);
    if (p.size() != m.rows() || q.size() != m.cols())
        throw ConfigError("nash_value_upper_lower: dimension mismatch");
    const double lower = robust_score(m, p);
    double upper = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < m.rows(); ++k) {
        double e = 0.0;
        for (size_t s = 0; s < m.cols(); ++s) e += q[s] * m.at(k, s);
        upper = std::max(upper, e);
    }
    return {lower, upper};
}

}  // namespace snash

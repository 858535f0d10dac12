// Scalar reference kernels. The poly variant mirrors the SIMD lane structure
// (8 virtual lanes, explicit fma) so that its results are bitwise comparable
// with the AVX2/AVX-512 implementations.

#include "snash/kernels.hpp"

#include <cmath>

namespace snash::kernels {

namespace {
constexpr double kC3 = 1.0 / 6.0;
constexpr double kC2 = 0.5;
}  // namespace

double sweep_scalar_exp(double* w, size_t n, const SweepParams& p, double* block_sums) {
    double total = 0.0;
    for (size_t base = 0; base < n; base += kBlock) {
        double lane[kLanes] = {0, 0, 0, 0, 0, 0, 0, 0};
        for (size_t i = base; i < base + kBlock; i += kLanes) {
            for (size_t j = 0; j < kLanes; ++j) {
                const double t = w[i + j] * p.inv_total;
                const double prob = std::fma(p.mix, t, p.floor);
                const double wn = w[i + j] * std::exp(p.bonus / prob);
                w[i + j] = wn;
                lane[j] += wn;
            }
        }
        const double s = sum_lanes(lane);
        block_sums[base / kBlock] = s;
        total += s;
    }
    return total;
}

double sweep_scalar_poly(double* w, size_t n, const SweepParams& p, double* block_sums) {
    double total = 0.0;
    for (size_t base = 0; base < n; base += kBlock) {
        double lane[kLanes] = {0, 0, 0, 0, 0, 0, 0, 0};
        for (size_t i = base; i < base + kBlock; i += kLanes) {
            for (size_t j = 0; j < kLanes; ++j) {
                const double t = w[i + j] * p.inv_total;
                const double prob = std::fma(p.mix, t, p.floor);
                const double x = p.bonus / prob;
                // exp(x) ~ 1 + x + x^2/2 + x^3/6, exact in double for tiny x
                const double e = std::fma(x, std::fma(x, std::fma(x, kC3, kC2), 1.0), 1.0);
                const double wn = w[i + j] * e;
                w[i + j] = wn;
                lane[j] += wn;
            }
        }
        const double s = sum_lanes(lane);
        block_sums[base / kBlock] = s;
        total += s;
    }
    return total;
}

}  // namespace snash::kernels

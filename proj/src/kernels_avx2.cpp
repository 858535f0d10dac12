// AVX2 sweep kernel. Two 4-lane accumulators emulate the shared 8-lane
// block-sum structure; per-element operations match the scalar poly kernel
// exactly (mul, div, fma chain are all correctly rounded IEEE ops).

#if defined(__x86_64__)

#include <immintrin.h>

#include "snash/kernels.hpp"

namespace snash::kernels {

double sweep_avx2_poly(double* w, size_t n, const SweepParams& p, double* block_sums) {
    const __m256d inv_total = _mm256_set1_pd(p.inv_total);
    const __m256d mix = _mm256_set1_pd(p.mix);
    const __m256d floor_v = _mm256_set1_pd(p.floor);
    const __m256d bonus = _mm256_set1_pd(p.bonus);
    const __m256d c3 = _mm256_set1_pd(1.0 / 6.0);
    const __m256d c2 = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);

    double total = 0.0;
    for (size_t base = 0; base < n; base += kBlock) {
        __m256d acc_lo = _mm256_setzero_pd();
        __m256d acc_hi = _mm256_setzero_pd();
        for (size_t i = base; i < base + kBlock; i += kLanes) {
            const __m256d w_lo = _mm256_loadu_pd(w + i);
            const __m256d w_hi = _mm256_loadu_pd(w + i + 4);

            const __m256d p_lo = _mm256_fmadd_pd(mix, _mm256_mul_pd(w_lo, inv_total), floor_v);
            const __m256d p_hi = _mm256_fmadd_pd(mix, _mm256_mul_pd(w_hi, inv_total), floor_v);

            const __m256d x_lo = _mm256_div_pd(bonus, p_lo);
            const __m256d x_hi = _mm256_div_pd(bonus, p_hi);

            __m256d e_lo = _mm256_fmadd_pd(x_lo, c3, c2);
            __m256d e_hi = _mm256_fmadd_pd(x_hi, c3, c2);
            e_lo = _mm256_fmadd_pd(x_lo, e_lo, one);
            e_hi = _mm256_fmadd_pd(x_hi, e_hi, one);
            e_lo = _mm256_fmadd_pd(x_lo, e_lo, one);
            e_hi = _mm256_fmadd_pd(x_hi, e_hi, one);

            const __m256d wn_lo = _mm256_mul_pd(w_lo, e_lo);
            const __m256d wn_hi = _mm256_mul_pd(w_hi, e_hi);
            _mm256_storeu_pd(w + i, wn_lo);
            _mm256_storeu_pd(w + i + 4, wn_hi);
            acc_lo = _mm256_add_pd(acc_lo, wn_lo);
            acc_hi = _mm256_add_pd(acc_hi, wn_hi);
        }
        double lane[kLanes];
        _mm256_storeu_pd(lane, acc_lo);
        _mm256_storeu_pd(lane + 4, acc_hi);
        const double s = sum_lanes(lane);
        block_sums[base / kBlock] = s;
        total += s;
    }
    return total;
}

}  // namespace snash::kernels

#endif  // __x86_64__

// AVX-512 sweep kernel: one full 8-lane vector per iteration.

#if defined(__x86_64__)

#include <immintrin.h>

#include "snash/kernels.hpp"

namespace snash::kernels {

double sweep_avx512_poly(double* w, size_t n, const SweepParams& p, double* block_sums) {
    const __m512d inv_total = _mm512_set1_pd(p.inv_total);
    const __m512d mix = _mm512_set1_pd(p.mix);
    const __m512d floor_v = _mm512_set1_pd(p.floor);
    const __m512d bonus = _mm512_set1_pd(p.bonus);
    const __m512d c3 = _mm512_set1_pd(1.0 / 6.0);
    const __m512d c2 = _mm512_set1_pd(0.5);
    const __m512d one = _mm512_set1_pd(1.0);

    double total = 0.0;
    for (size_t base = 0; base < n; base += kBlock) {
        __m512d acc = _mm512_setzero_pd();
        for (size_t i = base; i < base + kBlock; i += kLanes) {
            const __m512d wv = _mm512_loadu_pd(w + i);
            const __m512d prob = _mm512_fmadd_pd(mix, _mm512_mul_pd(wv, inv_total), floor_v);
            const __m512d x = _mm512_div_pd(bonus, prob);
            __m512d e = _mm512_fmadd_pd(x, c3, c2);
            e = _mm512_fmadd_pd(x, e, one);
            e = _mm512_fmadd_pd(x, e, one);
            const __m512d wn = _mm512_mul_pd(wv, e);
            _mm512_storeu_pd(w + i, wn);
            acc = _mm512_add_pd(acc, wn);
        }
        double lane[kLanes];
        _mm512_storeu_pd(lane, acc);
        const double s = sum_lanes(lane);
        block_sums[base / kBlock] = s;
        total += s;
    }
    return total;
}

}  // namespace snash::kernels

#endif  // __x86_64__

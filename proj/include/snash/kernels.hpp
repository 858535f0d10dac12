// Weight-update sweep kernels for the exponential-weights bandit.
//
// One sweep applies the per-step exploration bonus to every arm:
//
//   p_i = fma(mix, w_i * inv_total, floor)        mix = 1-gamma, floor = gamma/K
//   w_i <- w_i * exp(bonus / p_i)                 bonus = (gamma/(3K)) * eta / sqrt(T*K)
//
// and produces per-block partial sums of the updated weights (used for O(1)
// sampling) plus the new total. This loop runs for every arm at every step,
// so it dominates large-game solve time; it is provided as a scalar reference
// kernel plus AVX2 and AVX-512 variants selected at runtime.
//
// Equivalence contract: the three *_poly kernels perform bit-identical IEEE
// operations per element (mul, div, fma chain) and accumulate block sums in
// the same 8-lane order, so their outputs are bitwise equal; tests assert
// this. The poly kernels replace exp(x) with its cubic Taylor polynomial,
// which is exact to double precision for x <= kPolyMaxExponent; for larger
// exponents (small arm counts) the scalar exp kernel is used instead.
//
// Array layout: n is a multiple of kBlock; entries past the true arm count
// are zero padding. Padded entries stay exactly zero across sweeps.

#pragma once

#include <cstddef>
#include <string>

namespace snash::kernels {

inline constexpr size_t kBlock = 256;
inline constexpr size_t kLanes = 8;
inline constexpr double kPolyMaxExponent = 1e-4;

struct SweepParams {
    double inv_total;
    double mix;
    double floor;
    double bonus;
};

// Updates w[0..n) in place, writes n/kBlock block sums, returns the new total.
using SweepFn = double (*)(double* w, size_t n, const SweepParams& p, double* block_sums);

double sweep_scalar_exp(double* w, size_t n, const SweepParams& p, double* block_sums);
double sweep_scalar_poly(double* w, size_t n, const SweepParams& p, double* block_sums);
#if defined(__x86_64__)
double sweep_avx2_poly(double* w, size_t n, const SweepParams& p, double* block_sums);
double sweep_avx512_poly(double* w, size_t n, const SweepParams& p, double* block_sums);
#endif

bool cpu_has_avx2();
bool cpu_has_avx512();

enum class KernelChoice { automatic, scalar, avx2, avx512 };

KernelChoice parse_kernel_choice(const std::string& name);
std::string kernel_choice_name(KernelChoice c);

// Picks the sweep implementation for a given worst-case exponent
// (bonus / floor). Explicit AVX requests fail on unsupported hardware.
SweepFn select_sweep(double max_exponent, KernelChoice choice = KernelChoice::automatic);
std::string selected_sweep_name(double max_exponent, KernelChoice choice = KernelChoice::automatic);

// Fixed reduction order shared by every kernel.
inline double sum_lanes(const double lane[kLanes]) {
    return ((lane[0] + lane[1]) + (lane[2] + lane[3])) +
           ((lane[4] + lane[5]) + (lane[6] + lane[7]));
}

}  // namespace snash::kernels

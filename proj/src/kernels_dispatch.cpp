// Runtime kernel selection.

#include "snash/kernels.hpp"

#include "snash/errors.hpp"

namespace snash::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

bool cpu_has_avx512() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx512f");
#else
    return false;
#endif
}

KernelChoice parse_kernel_choice(const std::string& name) {
    if (name == "auto") return KernelChoice::automatic;
    if (name == "scalar") return KernelChoice::scalar;
    if (name == "avx2") return KernelChoice::avx2;
    if (name == "avx512") return KernelChoice::avx512;
    throw ConfigError("unknown kernel '" + name + "' (expected auto|scalar|avx2|avx512)");
}

std::string kernel_choice_name(KernelChoice c) {
    switch (c) {
        case KernelChoice::automatic: return "auto";
        case KernelChoice::scalar: return "scalar";
        case KernelChoice::avx2: return "avx2";
        case KernelChoice::avx512: return "avx512";
    }
    return "auto";
}

namespace {

struct Selection {
    SweepFn fn;
    const char* name;
};

Selection select_impl(double max_exponent, KernelChoice choice) {
    // Outside the cubic polynomial's validity range only the exp kernel is
    // correct; this regime occurs for small arm counts where speed is moot.
    if (max_exponent > kPolyMaxExponent) return {sweep_scalar_exp, "scalar_exp"};

    switch (choice) {
        case KernelChoice::scalar:
            return {sweep_scalar_poly, "scalar_poly"};
        case KernelChoice::avx2:
#if defined(__x86_64__)
            if (cpu_has_avx2()) return {sweep_avx2_poly, "avx2_poly"};
#endif
            throw ConfigError("kernel avx2 requested but not supported on this CPU");
        case KernelChoice::avx512:
#if defined(__x86_64__)
            if (cpu_has_avx512()) return {sweep_avx512_poly, "avx512_poly"};
#endif
            throw ConfigError("kernel avx512 requested but not supported on this CPU");
        case KernelChoice::automatic:
            break;
    }
#if defined(__x86_64__)
    if (cpu_has_avx512()) return {sweep_avx512_poly, "avx512_poly"};
    if (cpu_has_avx2()) return {sweep_avx2_poly, "avx2_poly"};
#endif
    return {sweep_scalar_poly, "scalar_poly"};
}

}  // namespace

SweepFn select_sweep(double max_exponent, KernelChoice choice) {
    return select_impl(max_exponent, choice).fn;
}

std::string selected_sweep_name(double max_exponent, KernelChoice choice) {
    return select_impl(max_exponent, choice).name;
}

}  // namespace snash::kernels

// Deterministic random number generation.
//
// xoshiro256++ is used for all stochastic draws. Results are identical across
// platforms, which std::uniform_real_distribution does not guarantee.
// splitmix64 seeds the state and derives per-task seeds from a master seed.

#pragma once

#include <array>
#include <cstdint>

namespace snash {

inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed for learning `learning_index` of cell `cell_index` under `master`.
// Documented so external tooling can reproduce per-run streams:
//   s = master; absorb (cell+1) and (learning+1) via one splitmix64 step each,
//   xoring the raw index into the evolving state before each step.
inline uint64_t derive_seed(uint64_t master, uint64_t cell_index, uint64_t learning_index) {
    uint64_t s = master;
    (void)splitmix64_next(s);
    s ^= 0xA0761D6478BD642FULL * (cell_index + 1);
    (void)splitmix64_next(s);
    s ^= 0xE7037ED1A0B428DBULL * (learning_index + 1);
    return splitmix64_next(s);
}

class Rng {
public:
    explicit Rng(uint64_t seed = 0x853C49E6748FEA9BULL) { reseed(seed); }

    void reseed(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64_next(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) {
        uint64_t i = uint64_t(next_double() * double(n));
        return i >= n ? n - 1 : i;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<uint64_t, 4> state_;
};

}  // namespace snash

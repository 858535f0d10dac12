// Ternary vectors over {0, 1/2, 1} and their bijection onto arm indices.
//
// A component c maps to the base-3 digit 2*c; digits are read least
// significant first, so component 0 varies fastest. decode(encode(v)) == v
// over the whole domain.

#pragma once

#include <cstdint>
#include <vector>

#include "snash/errors.hpp"

namespace snash {

struct TernaryVector {
    std::vector<double> components;  // each exactly 0, 0.5 or 1

    bool operator==(const TernaryVector&) const = default;
};

inline bool valid_ternary_component(double c) { return c == 0.0 || c == 0.5 || c == 1.0; }

inline int64_t pow3(int len) {
    int64_t p = 1;
    for (int i = 0; i < len; ++i) p *= 3;
    return p;
}

inline int64_t encode_ternary(const TernaryVector& v) {
    int64_t index = 0;
    int64_t place = 1;
    for (double c : v.components) {
        if (!valid_ternary_component(c))
            throw ConfigError("ternary component outside {0, 1/2, 1}");
        index += int64_t(c * 2.0) * place;
        place *= 3;
    }
    return index;
}

inline TernaryVector decode_ternary(int64_t index, int len) {
    if (len < 0 || index < 0 || index >= pow3(len))
        throw ConfigError("ternary index out of range for given length");
    TernaryVector v;
    v.components.resize(size_t(len));
    for (int i = 0; i < len; ++i) {
        v.components[size_t(i)] = double(index % 3) * 0.5;
        index /= 3;
    }
    return v;
}

}  // namespace snash

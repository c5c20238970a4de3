#pragma once

#include <cstdint>

namespace nwall {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Representative of n modulo k in {1, ..., k}; so [0]_k = k.
inline std::int64_t rep_mod(std::int64_t n, std::int64_t k) {
    std::int64_t r = n % k;
    if (r <= 0) r += k;
    return r;
}

}  // namespace nwall

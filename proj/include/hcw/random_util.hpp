#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "hcw/param_vector.hpp"

namespace hcw {

// Small exact rationals for randomized identity checks.
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

inline ParamVector random_param_vector(int n, std::mt19937_64& rng, bool nonzero = true) {
    for (;;) {
        ParamVector u;
        u.reserve(n);
        for (int i = 0; i < n; ++i) u.push_back(random_rational(rng));
        if (!nonzero || !is_zero_vector(u)) return u;
    }
}

// Admissible point for the Cayley transform: leading parameter nonzero.
inline ParamVector random_cayley_point(int n, std::mt19937_64& rng) {
    for (;;) {
        ParamVector u = random_param_vector(n, rng);
        if (!u[0].is_zero()) return u;
    }
}

// Per-case seed derived from the master seed and the case name, so case
// execution order cannot change the draws.
inline uint64_t case_seed(uint64_t master, std::string_view name) {
    uint64_t h = 1469598103934665603ull ^ master;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace hcw

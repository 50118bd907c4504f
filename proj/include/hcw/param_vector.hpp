#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hcw/rational.hpp"

namespace hcw {

// The exact parameter vector u. Constructions require a length from
// {2, 4, 8, 16}; helpers below enforce it at the call sites that care.
using ParamVector = std::vector<Rational>;

inline Rational norm_sq(const ParamVector& u) {
    Rational s(0);
    for (const auto& c : u) s += c * c;
    return s;
}

inline bool is_zero_vector(const ParamVector& u) {
    for (const auto& c : u)
        if (!c.is_zero()) return false;
    return true;
}

inline void check_param_length(const ParamVector& u, int n, const char* where) {
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument(std::string(where) + ": parameter vector must have length " +
                                    std::to_string(n) + ", got " + std::to_string(u.size()));
}

}  // namespace hcw

#pragma once

// Parser for the polynomial string format produced by MultiPoly::to_string,
// e.g. "u1^2 - 2*u2*u3 + 1/2". Only the two variable families u/x are
// recognized; the target variable list fixes arity and ordering.

#include <string>

#include "hcw/multipoly.hpp"

namespace hcw {

MultiPoly parse_poly(const std::string& text, const VarList& vars);

}  // namespace hcw

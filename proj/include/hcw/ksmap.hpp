#pragma once

// Quadratic maps R^{2(n-1)} -> R^n built from the last column / last row of
// the scaled Cayley matrix. With m = n - 1 and v = (u_{m+1}, ..., u_{2m}):
//   right (last column): x_{1..m} = -2 H_m(u_1..u_m)^t v,
//   left  (last row):    x_{1..m} =  2 H_m(u_1..u_m)   v,
// and in both cases x_n = rho1^2 - rho2^2 (first-half minus second-half
// parameter norms). Each component is homogeneous of degree 2, and
// sum x_i^2 = (|u|^2)^2 holds identically.

#include <vector>

#include "hcw/multipoly.hpp"
#include "hcw/param_vector.hpp"

namespace hcw::ksmap {

enum class Side { left, right };

const char* side_name(Side s);

struct QuadraticMap {
    int n_target;
    int n_source;  // 2 * (n_target - 1)
    Side side;
    std::vector<MultiPoly> components;
};

bool supported_target(int n);  // {3, 5, 9}

const QuadraticMap& last_column_map(int n);  // side = right
const QuadraticMap& last_row_map(int n);     // side = left
const QuadraticMap& map_for(int n, Side side);

// The R^2 -> R^2 pair (the conformal square map); used by the Laplacian
// factorization checks, which cover n = 2 as well.
const QuadraticMap& levi_civita_map(Side side);

std::vector<Rational> apply_map(const QuadraticMap& m, const ParamVector& u);
std::vector<double> apply_map(const QuadraticMap& m, const std::vector<double>& u);

MultiPoly first_half_norm_sq(const VarList& vars);   // rho1^2
MultiPoly second_half_norm_sq(const VarList& vars);  // rho2^2

}  // namespace hcw::ksmap

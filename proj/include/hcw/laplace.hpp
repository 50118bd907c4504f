#pragma once

// Exact verification of the factorization
//   Laplacian_u (f o x) = 4 |u|^2 (Laplacian_x f) o x
// for the quadratic maps with n in {2, 3, 5, 9}, as polynomial identities.
// Compositions of monomials are memoized per map, so whole harmonic suites
// reuse the expensive products.

#include <vector>

#include "hcw/ksmap.hpp"
#include "hcw/matrix.hpp"
#include "hcw/multipoly.hpp"

namespace hcw::laplace {

using ksmap::Side;

struct LaplaceReport {
    int n;
    Side side;
    MultiPoly test_poly;
    MultiPoly lhs;
    MultiPoly rhs;
    MultiPoly residual;
    bool passed;
};

// Sum of second partials over the given variables (all of p's variables for
// the single-argument form).
MultiPoly laplacian(const MultiPoly& p);
MultiPoly laplacian(const MultiPoly& p, const std::vector<VarId>& vars);

bool supported_target(int n);  // {2, 3, 5, 9}

// The map used by the factorization checks; n = 2 is the conformal square
// map, the rest come from ksmap.
const ksmap::QuadraticMap& map_for(int n, Side side);

// f must live over x_1..x_n. Failure is reported, not thrown.
LaplaceReport verify_factorization(int n, Side side, const MultiPoly& f);

// Same check against an arbitrary replacement map (used by the deliberately
// corrupted negative control).
LaplaceReport verify_factorization_with_map(const ksmap::QuadraticMap& map, const MultiPoly& f);

// Spanning harmonics per degree: x_i; x_i x_j and x_i^2 - x_{i+1}^2; and an
// exact null-space basis of the Laplacian on the degree-3 monomial space.
// max_degree is capped at 3.
std::vector<MultiPoly> harmonic_monomial_suite(int n, int max_degree);

// The right map for n = 3 with one sign flipped in its first component;
// the factorization must fail on it.
ksmap::QuadraticMap corrupted_map_n3();

// Gram matrix of the map's Jacobian rows: entry (k, l) is
// sum_i (d x_k / d u_i)(d x_l / d u_i); equals 4 |u|^2 delta_kl for the
// genuine maps.
PolyMatrix jacobian_gram(const ksmap::QuadraticMap& map);

}  // namespace hcw::laplace

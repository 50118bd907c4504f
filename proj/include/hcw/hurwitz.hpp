#pragma once

// The composition-of-squares matrix family H_n: square matrices linear in the
// parameters u_1..u_n with H * H^t = (sum u_i^2) * I for n in {2, 4, 8}. H_4
// and H_8 arise from H_2 by a block doubling; the same doubling applied once
// more yields the 16x16 candidate, which cannot satisfy the identity (no
// bilinear sixteen-square composition exists), so the n = 16 build is
// rejected loudly after the check runs. The skew part S_n = H_n at u_1 = 0
// and the anticommuting factors extracted from H_n are what the rest of the
// project consumes; the principal minors of the 16x16 pattern remain
// perfectly usable and feed the Cayley transform.

#include <vector>

#include "hcw/matrix.hpp"
#include "hcw/param_vector.hpp"

namespace hcw::hurwitz {

// Signed-index pattern: entry +k encodes +u_k, -k encodes -u_k.
using Pattern = DenseMatrix<int>;

// m in {2, 4, 8, 16}. The 16x16 pattern exists as a pattern; only the
// orthogonality identity fails for it.
const Pattern& pattern(int m);

// Smallest ambient pattern size containing the n x n principal minor.
int ambient_dim(int n);
// Number of distinct parameters appearing in the n x n principal minor
// (plus u_1): 2 -> 2, 3 -> 4, 5 -> 8, 7 -> 8, 9 -> 16.
int minor_param_count(int n);

Pattern principal_minor_pattern(int n);

ExactMatrix eval_pattern(const Pattern& p, const ParamVector& u);
PolyMatrix pattern_to_poly(const Pattern& p, int nparams);

// True iff some sign variant of the block doubling of H_8 satisfies the
// orthogonality identity symbolically. Computed once and cached.
bool doubling_is_orthogonal();

// H_n(u). Throws for unsupported n, length mismatch, and for n = 16 (the
// identity demanded of the result cannot hold; see doubling_is_orthogonal).
ExactMatrix build_hurwitz(int n, const ParamVector& u);
PolyMatrix build_hurwitz_symbolic(int n);

// S_n = H_n with u_1 = 0; antisymmetric.
ExactMatrix skew_part(int n, const ParamVector& u);
PolyMatrix skew_part_symbolic(int n);

// Skew n x n principal minor (u_1 = 0) over minor_param_count(n) parameters,
// for n in {2, 3, 5, 7, 9}. This is the S_n the Cayley transform uses.
PolyMatrix minor_skew_symbolic(int n);
ExactMatrix minor_skew(int n, const ParamVector& u);
// u_1 I + S_n over the same parameters.
PolyMatrix minor_full_symbolic(int n);
ExactMatrix minor_full(int n, const ParamVector& u);

// Gamma_i = -(coefficient of u_i in H_n)^t for i = 2..n; each Gamma_i is
// orthogonal-integer, satisfies Gamma_i^2 = -I and pairwise anticommutation.
// Supported n: {4, 8}; n = 16 is rejected for the same reason as the build.
std::vector<ExactMatrix> clifford_factors(int n);

// Coefficient pattern of u_k in a pattern matrix (entries -1/0/+1).
ExactMatrix coefficient_matrix(const Pattern& p, int k);

}  // namespace hcw::hurwitz

#pragma once

// Scaled Cayley transform on the skew principal minors: O_n(u) =
// |u|^2 (u_1 I - S_n)(u_1 I + S_n)^{-1}, kept exact. Numerically this is a
// single Gaussian elimination; symbolically the quadratic-form entries are
// reconstructed from exact evaluations at interpolation points and then
// certified against the defining relations
//   (u_1 I + S_n) O = |u|^2 (u_1 I - S_n) = O (u_1 I + S_n),
// which pins the matrix down completely.

#include "hcw/matrix.hpp"
#include "hcw/param_vector.hpp"

namespace hcw::cayley {

struct ScaledOrthogonal {
    int dim;
    ExactMatrix matrix;
    Rational scale_sq;  // |u|^2; matrix * matrix^t = scale_sq^2 * I
};

struct ScaledOrthogonalSym {
    int dim;
    PolyMatrix matrix;   // entries homogeneous of degree 2
    MultiPoly scale_sq;  // sum of squares of all parameters
};

bool supported_dim(int n);  // {2, 3, 5, 7, 9}

ScaledOrthogonal cayley_transform(int n, const ParamVector& u);

// Symbolic form with quadratic-form entries. This exists exactly for
// n in {2, 3, 7}; for n in {5, 9} the skew minor's square has two distinct
// eigen-moduli, the inverse denominator does not cancel, and only the last
// row/column of the transform are polynomial. Those dimensions throw a
// domain_error carrying an exact parallelogram-law witness.
const ScaledOrthogonalSym& cayley_transform_symbolic(int n);

// Exact proof text that some entry is not a quadratic form (used by the
// rejection path above).
std::string nonquadratic_witness(int n);

// Closed quadratic form |u|^2 I - 2 u_1 S_n + 2 S_n^2; defined for n in
// {3, 7}, where S_n^3 = -(|u|^2 - u_1^2) S_n holds (verified, not assumed).
const PolyMatrix& weyl_form_symbolic(int n);
ExactMatrix weyl_form(int n, const ParamVector& u);

// The (n+1)x(n+1) two-factor product identity: with H = u_1 I + S_n and the
// kernel vector V_n of S_n,
//   [ H^t  V^t ] [ H^t  -V^t ]   [ O_n(u)  0    ]
//   [ -V   u_1 ] [  V    u_1 ] = [ 0       |u|^2 ].
// A failed identity is reported, not thrown.
struct BlockIdentityReport {
    int n;
    PolyMatrix product;
    PolyMatrix residual;
    bool passed;
};
BlockIdentityReport block_identity(int n);  // n in {3, 7}
ExactMatrix block_identity_product(int n, const ParamVector& u);

// Kernel row vector of S_n as printed patterns: (u4, -u3, u2) for n = 3 and
// (u8, u7, -u6, -u5, u4, u3, -u2) for n = 7.
std::vector<MultiPoly> kernel_vector(int n);

}  // namespace hcw::cayley

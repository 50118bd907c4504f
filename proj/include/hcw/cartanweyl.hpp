#pragma once

// Adjoint-basis machinery for so(n): elementary antisymmetric matrices
// Sigma_ij, decomposition of parameter-linear matrices into per-parameter
// coefficient brackets, the Sylvester-Hadamard sign construction of the
// generating-matrix families for n in {4, 8, 16}, and the ten so(5)
// generators with their commutator table. Structure constants always come
// from explicit matrix multiplication, never from a printed formula.

#include <map>
#include <string>
#include <vector>

#include "hcw/hurwitz.hpp"
#include "hcw/linalg.hpp"
#include "hcw/matrix.hpp"
#include "hcw/param_vector.hpp"

namespace hcw::cartanweyl {

struct AdjointElement {
    int n, i, j;  // 1 <= i < j <= n
    ExactMatrix matrix;
};

// +1 at (i, j), -1 at (j, i); requires 1 <= i < j <= n.
AdjointElement sigma(int n, int i, int j);
ExactMatrix sigma_matrix(int n, int i, int j);
// Any i != j (antisymmetric extension); internal building block.
ExactMatrix sigma_signed(int n, int i, int j);

struct SignedSigma {
    int i, j;        // i < j
    Rational coeff;  // usually +-1
};

// u_1 * diag + sum_k u_k * (signed Sigma combination).
struct GeneratingMatrix {
    int n = 0;
    std::vector<Rational> diag;  // coefficient of u_1 (a diagonal matrix)
    std::map<int, std::vector<SignedSigma>> coeffs;  // k >= 2

    ExactMatrix evaluate(const ParamVector& u) const;
    PolyMatrix to_poly() const;
    ExactMatrix skew_coefficient(int k) const;
};

// Splits a matrix linear in u_1..u_n into the bracket form above. The u_1
// coefficient must be diagonal and every other coefficient antisymmetric;
// nonlinear dependence on any u_k is an error. Rebuilding always reproduces
// the input exactly.
GeneratingMatrix decompose_adjoint(const PolyMatrix& h);

// Sylvester construction, dimension 2^m, desk cap m <= 4; H * H^t = 2^m I.
ExactMatrix hadamard_sylvester(int m);

// The canonical printed 8x8 adjoint-form matrix and its bracket data.
const hurwitz::Pattern& canonical_h8_pattern();
PolyMatrix canonical_h8_poly();
// Printed 4x4 sign matrices (which = 1 for the u_1..u_4 group, 2 for
// u_5..u_8); rows are the bracket signs of the canonical matrix.
ExactMatrix printed_sign_matrix(int which);
// Printed slot lists of the canonical brackets, k = 2..8 (pairs i < j).
const std::vector<std::pair<int, int>>& canonical_slots(int k);

// n/2 generating matrices for n in {4, 8, 16}. The n = 4 pair is the two
// commuting spin embeddings; n = 8 is the canonical matrix plus cyclic row
// permutations of its sign matrices; n = 16 takes sign rows from the 8x8
// Sylvester-Hadamard matrix, cyclically permuted. The union of extracted
// skew coefficients must reach exact rank n(n-1)/2 or construction throws
// with the achieved rank.
const std::vector<GeneratingMatrix>& generating_matrices(int n);

struct GeneratorSet {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<ExactMatrix> generators;
};

// The ten 5x5 skew generators S_1..S_3, T_1..T_3, U_1, U_2, V_1, V_2.
GeneratorSet so5_generators();

// Extracted skew coefficients of generating_matrices(n), labelled
// "G[i][u_k]".
GeneratorSet generators_from_generating_matrices(int n);

// Spin embeddings as fixed by the printed 4x4/5x5 matrices ("hatted"):
// hat_S: 1 -> S14+S23, 2 -> S13-S24, 3 -> S12+S34 (and hat_T with the
// second sign flipped), embedded top-left into an n x n matrix.
ExactMatrix hat_S(int a, int n);
ExactMatrix hat_T(int a, int n);

struct CommutatorEntry {
    int a, b;                     // generator indices, a < b
    bool in_span;                 // commutator lies in span of the set
    std::vector<Rational> coeffs; // expansion coefficients when in_span
};

struct CommutatorTable {
    int size = 0;
    std::vector<CommutatorEntry> entries;
    bool closed = false;  // every commutator lies in the span
};

CommutatorTable commutator_table(const GeneratorSet& g);

// Dimension of the smallest commutator-closed span containing g, by exact
// fixed-point iteration. Spans that already fill the antisymmetric space
// are closed and short-circuit.
int lie_closure_rank(const GeneratorSet& g);

// The appendix commutation rule, compared index-by-index against matrix
// ground truth in the complexified realization L_ij = -i Sigma_ij. Returns
// the number of (i<j, k<l) index tuples where the rule disagrees.
int printed_rule_mismatch_count(int n);
int corrected_rule_mismatch_count(int n);

}  // namespace hcw::cartanweyl

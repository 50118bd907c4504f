#pragma once

// Exact linear algebra over the rationals: Gaussian elimination with partial
// pivoting (largest pivot by absolute value), matrix inverse, determinant,
// rank, and null spaces. Every division is a field division, so results are
// exact wherever they exist.

#include <optional>
#include <vector>

#include "hcw/matrix.hpp"

namespace hcw {

// Solves A X = B for square nonsingular A. Throws std::domain_error when A
// is singular.
ExactMatrix solve_linear(ExactMatrix a, ExactMatrix b);

ExactMatrix inverse(const ExactMatrix& a);

Rational determinant(ExactMatrix a);

int rank(ExactMatrix a);

// Row-reduces in place; returns pivot column indices.
std::vector<int> rref(ExactMatrix& a);

// Basis of { v : A v = 0 }, one column vector per basis element.
std::vector<std::vector<Rational>> null_space(const ExactMatrix& a);

// Incremental exact rank tracker: feed row vectors, query the dimension of
// their span. Used for generator independence and Lie-closure computations.
class SpanTracker {
public:
    explicit SpanTracker(int width) : width_(width) {}

    // Returns true if the vector enlarged the span.
    bool insert(std::vector<Rational> v);
    int rank() const { return static_cast<int>(rows_.size()); }
    // Exact coordinates of v in the current row basis, if v lies in the span.
    std::optional<std::vector<Rational>> coordinates(std::vector<Rational> v) const;

private:
    bool reduce(std::vector<Rational>& v, std::vector<Rational>* coords) const;

    int width_;
    std::vector<std::vector<Rational>> rows_;  // echelon rows
    std::vector<int> pivots_;                  // pivot column of each row
    std::vector<std::vector<Rational>> combos_;  // row i = combos_[i] . inserted basis
    std::vector<std::vector<Rational>> basis_;   // the accepted original vectors
};

std::vector<Rational> flatten(const ExactMatrix& m);

}  // namespace hcw

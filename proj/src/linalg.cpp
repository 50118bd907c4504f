#include "hcw/linalg.hpp"

#include <stdexcept>

namespace hcw {

ExactMatrix eval_matrix(const PolyMatrix& m, const std::vector<Rational>& point) {
    ExactMatrix r(m.rows(), m.cols(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(point);
    return r;
}

ExactMatrix solve_linear(ExactMatrix a, ExactMatrix b) {
    if (!a.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("solve_linear: shape mismatch");
    const int n = a.dim();
    const int m = b.cols();

    for (int col = 0; col < n; ++col) {
        int piv = -1;
        Rational best(0);
        for (int r = col; r < n; ++r) {
            Rational mag = a.at(r, col).abs();
            if (!mag.is_zero() && (piv < 0 || mag > best)) {
                piv = r;
                best = mag;
            }
        }
        if (piv < 0) throw std::domain_error("solve_linear: singular matrix");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            for (int c = 0; c < m; ++c) std::swap(b.at(piv, c), b.at(col, c));
        }
        Rational inv = a.at(col, col).reciprocal();
        for (int c = col; c < n; ++c) a.at(col, c) *= inv;
        for (int c = 0; c < m; ++c) b.at(col, c) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
            for (int c = 0; c < m; ++c) b.at(r, c) -= f * b.at(col, c);
        }
    }
    return b;
}

ExactMatrix inverse(const ExactMatrix& a) {
    return solve_linear(a, ExactMatrix::identity(a.dim(), Rational(0)));
}

Rational determinant(ExactMatrix a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
    const int n = a.dim();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        Rational best(0);
        for (int r = col; r < n; ++r) {
            Rational mag = a.at(r, col).abs();
            if (!mag.is_zero() && (piv < 0 || mag > best)) {
                piv = r;
                best = mag;
            }
        }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        Rational inv = a.at(col, col).reciprocal();
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col) * inv;
            for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

std::vector<int> rref(ExactMatrix& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        Rational best(0);
        for (int r = row; r < a.rows(); ++r) {
            Rational mag = a.at(r, col).abs();
            if (!mag.is_zero() && (piv < 0 || mag > best)) {
                piv = r;
                best = mag;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
        Rational inv = a.at(row, col).reciprocal();
        for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(ExactMatrix a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<Rational>> null_space(const ExactMatrix& a) {
    ExactMatrix r = a;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols(), Rational(0));
        v[free] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool SpanTracker::reduce(std::vector<Rational>& v, std::vector<Rational>* coords) const {
    if (coords) coords->assign(rows_.size(), Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Rational f = c;  // pivots are normalized to 1
        for (int j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
        if (coords) (*coords)[i] = f;
    }
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

bool SpanTracker::insert(std::vector<Rational> v) {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("SpanTracker: wrong vector width");
    std::vector<Rational> lam;
    bool in_span = reduce(v, &lam);
    if (in_span) return false;

    int pivot = -1;
    for (int j = 0; j < width_; ++j)
        if (!v[j].is_zero()) { pivot = j; break; }

    // combo of reduced row over the original accepted vectors
    std::vector<Rational> combo(basis_.size() + 1, Rational(0));
    combo.back() = Rational(1);
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t k = 0; k < combos_[i].size(); ++k) combo[k] -= lam[i] * combos_[i][k];

    Rational inv = v[pivot].reciprocal();
    for (auto& c : v) c *= inv;
    for (auto& c : combo) c *= inv;

    // keep fully reduced form: clear the new pivot from existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rational f = rows_[i][pivot];
        if (f.is_zero()) continue;
        for (int j = 0; j < width_; ++j) rows_[i][j] -= f * v[j];
        combos_[i].resize(combo.size(), Rational(0));
        for (size_t k = 0; k < combo.size(); ++k) combos_[i][k] -= f * combo[k];
    }

    basis_.push_back({});  // original vector content is not needed, only its slot
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    combos_.push_back(std::move(combo));
    return true;
}

std::optional<std::vector<Rational>> SpanTracker::coordinates(std::vector<Rational> v) const {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("SpanTracker: wrong vector width");
    std::vector<Rational> lam;
    if (!reduce(v, &lam)) return std::nullopt;
    std::vector<Rational> out(basis_.size(), Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t k = 0; k < combos_[i].size(); ++k) out[k] += lam[i] * combos_[i][k];
    return out;
}

std::vector<Rational> flatten(const ExactMatrix& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

}  // namespace hcw

#pragma once

// Small dense matrices over an exact scalar ring (Rational, MultiPoly,
// GaussianRational). Dimensions in this project never exceed 16, so
// everything is straightforward O(n^3) arithmetic.

#include <stdexcept>
#include <vector>

#include "hcw/multipoly.hpp"
#include "hcw/rational.hpp"

namespace hcw {

// zero/one constructors that work for scalars needing context (MultiPoly
// carries its variable list, so "zero" must be derived from a sample).
template <typename T>
struct ScalarOps {
    static T zero_like(const T&) { return T(0); }
    static T one_like(const T&) { return T(1); }
};

template <>
struct ScalarOps<MultiPoly> {
    static MultiPoly zero_like(const MultiPoly& s) { return MultiPoly::zero(s.vars()); }
    static MultiPoly one_like(const MultiPoly& s) {
        return MultiPoly::constant(s.vars(), Rational(1));
    }
};

template <typename T>
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static DenseMatrix zeros(int rows, int cols, const T& sample) {
        return DenseMatrix(rows, cols, ScalarOps<T>::zero_like(sample));
    }
    static DenseMatrix identity(int n, const T& sample) {
        DenseMatrix m = zeros(n, n, sample);
        T one = ScalarOps<T>::one_like(sample);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int dim() const {
        if (!is_square()) throw std::logic_error("DenseMatrix: dim() on non-square matrix");
        return rows_;
    }

    T& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    DenseMatrix transpose() const {
        DenseMatrix m(cols_, rows_, data_.empty() ? T() : data_.front());
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    DenseMatrix operator+(const DenseMatrix& o) const {
        check_same_shape(o);
        DenseMatrix m = *this;
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
        return m;
    }

    DenseMatrix operator-(const DenseMatrix& o) const {
        check_same_shape(o);
        DenseMatrix m = *this;
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
        return m;
    }

    DenseMatrix operator-() const {
        DenseMatrix m = *this;
        for (auto& v : m.data_) v = -v;
        return m;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("DenseMatrix: shapes do not compose");
        T z = ScalarOps<T>::zero_like(data_.empty() ? o.data_.front() : data_.front());
        DenseMatrix m(rows_, o.cols_, z);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(r, k);
                for (int c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
            }
        return m;
    }

    DenseMatrix scale(const T& s) const {
        DenseMatrix m = *this;
        for (auto& v : m.data_) v = v * s;
        return m;
    }

    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_antisymmetric() const {
        if (!is_square()) return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c) != -at(c, r)) return false;
        return true;
    }

    int nonzero_count() const {
        int k = 0;
        for (const auto& v : data_)
            if (!v.is_zero()) ++k;
        return k;
    }

private:
    void check_same_shape(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("DenseMatrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<Rational>;
using PolyMatrix = DenseMatrix<MultiPoly>;
using GaussMatrix = DenseMatrix<GaussianRational>;

// Evaluates a polynomial matrix at an exact point.
ExactMatrix eval_matrix(const PolyMatrix& m, const std::vector<Rational>& point);

}  // namespace hcw

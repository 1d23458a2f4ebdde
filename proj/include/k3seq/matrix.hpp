#pragma once

#include <cassert>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "k3seq/rational.hpp"

namespace k3seq {

/// Dense row-major matrix over Int or Rat.  Dimensions may be zero.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        a_.reserve(size_t(rows_) * cols_);
        for (const auto& row : init) {
            assert(int(row.size()) == cols_);
            for (const auto& v : row) a_.push_back(v);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[size_t(i) * cols_ + j];
    }
    const T& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[size_t(i) * cols_ + j];
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols_ == y.rows_);
        Mat z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0)) continue;
                for (int j = 0; j < y.cols_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Mat z = x;
        for (size_t k = 0; k < z.a_.size(); ++k) z.a_[k] += y.a_[k];
        return z;
    }

    Mat operator*(const T& s) const {
        Mat z = *this;
        for (auto& v : z.a_) v = v * s;
        return z;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != T(0)) return false;
        return true;
    }

    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    void set_row(int i, const std::vector<T>& r) {
        assert(int(r.size()) == cols_);
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(int i, int j) {
        for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += c * row j
    void add_row(int i, int j, const T& c) {
        for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
    }
    void add_col(int i, int j, const T& c) {
        for (int k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
    }
    void negate_row(int i) {
        for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }

    /// Submatrix picking the given rows/columns in order.
    Mat select(const std::vector<int>& rs, const std::vector<int>& cs) const {
        Mat m(int(rs.size()), int(cs.size()));
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

QMat to_qmat(const IMat& m);
/// Fails if any entry has a denominator; use after clearing denominators.
IMat to_imat(const QMat& m);

/// Determinant by fraction-free Bareiss elimination.
Int det_bareiss(const IMat& m);
/// Exact rational determinant: rows are scaled integral, then Bareiss.
Rat det(const QMat& m);

QMat inverse(const QMat& m);  // throws on singular input

/// Basis (rows) of the rational left kernel { x : x * m = 0 }.
QMat left_kernel(const QMat& m);

/// Rank over the rationals.
int rank(const QMat& m);

/// Least common multiple of all entry denominators (>= 1).
Int denominator_lcm(const QMat& m);

std::ostream& operator<<(std::ostream& os, const IMat& m);
std::ostream& operator<<(std::ostream& os, const QMat& m);

}  // namespace k3seq

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "common.hpp"

namespace semicoh {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw invalid_input("ragged matrix literal");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const Int& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw internal_error("matrix index out of range");
        return a_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row dst += c * row src
    void addmul_row(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
    }
    // col dst += c * col src
    void addmul_col(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw internal_error("matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw internal_error("matrix sum shape mismatch");
        IntMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw internal_error("matrix difference shape mismatch");
        IntMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    std::vector<Int> column(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(std::size_t j, const std::vector<Int>& c) {
        if (c.size() != rows_) throw internal_error("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (x.size() != cols_) throw internal_error("matrix-vector shape mismatch");
        std::vector<Int> y(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_) throw internal_error("hconcat row mismatch");
        IntMatrix c(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
        }
        return c;
    }

    // Rows picked by index list, in the order given.
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const {
        IntMatrix r(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
        return r;
    }
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const {
        IntMatrix r(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
        return r;
    }
    IntMatrix top_rows(std::size_t n) const {
        IntMatrix r(n, cols_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

inline IntMatrix scalar_matrix(std::size_t n, const Int& c) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

inline IntMatrix diagonal_matrix(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

}  // namespace semicoh

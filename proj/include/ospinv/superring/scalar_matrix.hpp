#pragma once

#include "ospinv/superring/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospinv {

/// Small dense matrix over Q(i); used for the form, group elements and
/// coordinate changes.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static ScalarMatrix identity(int k) {
        ScalarMatrix r(k, k);
        for (int i = 0; i < k; ++i) r(i, i) = Scalar(1);
        return r;
    }

    static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
        int r = int(rows.size());
        int c = r == 0 ? 0 : int(rows.front().size());
        ScalarMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Block diagonal diag(a, b).
    static ScalarMatrix block_diag(const ScalarMatrix& a, const ScalarMatrix& b) {
        ScalarMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    ScalarMatrix transpose() const {
        ScalarMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        ScalarMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& a) {
        ScalarMatrix r = a;
        for (auto& x : r.data_) x = c * x;
        return r;
    }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Determinant by fraction-based elimination (the field is exact).
    Scalar det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        ScalarMatrix a = *this;
        Scalar d(1);
        for (int c = 0; c < rows_; ++c) {
            int p = c;
            while (p < rows_ && a(p, c).is_zero()) ++p;
            if (p == rows_) return Scalar();
            if (p != c) {
                for (int j = 0; j < cols_; ++j) std::swap(a(p, j), a(c, j));
                d = -d;
            }
            d *= a(c, c);
            for (int i = c + 1; i < rows_; ++i) {
                if (a(i, c).is_zero()) continue;
                Scalar f = a(i, c) / a(c, c);
                for (int j = c; j < cols_; ++j) a(i, j) -= f * a(c, j);
            }
        }
        return d;
    }

    /// Inverse, absent when singular.
    std::optional<ScalarMatrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        int k = rows_;
        ScalarMatrix a = *this;
        ScalarMatrix inv = identity(k);
        for (int c = 0; c < k; ++c) {
            int p = c;
            while (p < k && a(p, c).is_zero()) ++p;
            if (p == k) return std::nullopt;
            if (p != c) {
                for (int j = 0; j < k; ++j) {
                    std::swap(a(p, j), a(c, j));
                    std::swap(inv(p, j), inv(c, j));
                }
            }
            Scalar piv = a(c, c);
            for (int j = 0; j < k; ++j) {
                a(c, j) = a(c, j) / piv;
                inv(c, j) = inv(c, j) / piv;
            }
            for (int i = 0; i < k; ++i) {
                if (i == c || a(i, c).is_zero()) continue;
                Scalar f = a(i, c);
                for (int j = 0; j < k; ++j) {
                    a(i, j) -= f * a(c, j);
                    inv(i, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) s += (j ? " " : "") + (*this)(i, j).to_string();
        }
        return s + "]";
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace ospinv

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qdelta/errors.hpp"

namespace qdelta {

/// Exact integer scalar, arbitrary magnitude.
using bigint = boost::multiprecision::cpp_int;

inline bigint gcd(const bigint& a, const bigint& b) {
    return boost::multiprecision::gcd(a, b);
}

inline bigint abs(const bigint& a) { return boost::multiprecision::abs(a); }

/// Dense row-major matrix over exact integers.
class int_matrix {
public:
    int_matrix() = default;

    int_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    int_matrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw dimension_mismatch("ragged initializer");
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static int_matrix identity(std::size_t n) {
        int_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static int_matrix from_rows(const std::vector<std::vector<bigint>>& rows,
                                std::size_t cols) {
        int_matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw dimension_mismatch("row length does not match column count");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bigint& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const bigint& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    std::vector<bigint> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    bool operator==(const int_matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const int_matrix& other) const { return !(*this == other); }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /// row[a] += c * row[b]
    void add_row_multiple(std::size_t a, std::size_t b, const bigint& c) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(a, j) += c * (*this)(b, j);
    }

    /// col[a] += c * col[b]
    void add_col_multiple(std::size_t a, std::size_t b, const bigint& c) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, a) += c * (*this)(i, b);
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<bigint> data_;
};

inline int_matrix operator*(const int_matrix& a, const int_matrix& b) {
    if (a.cols() != b.rows())
        throw dimension_mismatch("matrix product dimension mismatch");
    int_matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

/// Exact determinant via fraction-free (Bareiss) elimination.
inline bigint determinant(int_matrix m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("determinant of non-square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    bigint sign = 1;
    bigint prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace qdelta

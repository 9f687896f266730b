#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace embedcheck {

/// Dense row-major matrix over any ring element type. A zero prototype is
/// stored so element types that carry context (F_p, group rings) have a
/// well-defined zero for empty and resized matrices.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero)
    {
    }

    static Matrix identity(std::size_t n, const T& zero, const T& one)
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    T& at(std::size_t r, std::size_t c)
    {
        check(r, c);
        return (*this)(r, c);
    }
    const T& at(std::size_t r, std::size_t c) const
    {
        check(r, c);
        return (*this)(r, c);
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const T& q)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) += q * (*this)(src, j);
    }
    /// col[dst] += col[src] * q
    void add_col_multiple(std::size_t dst, std::size_t src, const T& q)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) += (*this)(i, src) * q;
    }
    void scale_row(std::size_t r, const T& u)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = u * (*this)(r, j);
    }
    void scale_col(std::size_t c, const T& u)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, c) = (*this)(i, c) * u;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const
    {
        Matrix m(rs.size(), cs.size(), zero_);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j)
                m(i, j) = at(rs[i], cs[j]);
        return m;
    }
    Matrix without_col(std::size_t c) const
    {
        std::vector<std::size_t> rs(rows_), cs;
        for (std::size_t i = 0; i < rows_; ++i)
            rs[i] = i;
        for (std::size_t j = 0; j < cols_; ++j)
            if (j != c)
                cs.push_back(j);
        return submatrix(rs, cs);
    }
    void append_row(const std::vector<T>& row)
    {
        if (row.size() != cols_)
            throw std::invalid_argument("Matrix::append_row: width mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    template <class U, class F>
    Matrix<U> map(const U& zero, F&& f) const
    {
        Matrix<U> m(rows_, cols_, zero);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = f((*this)(i, j));
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix product: dimension mismatch");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == a.zero_)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (!(v == zero_))
                return false;
        return true;
    }

private:
    void check(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("Matrix index out of range");
    }

    std::size_t rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

} // namespace embedcheck

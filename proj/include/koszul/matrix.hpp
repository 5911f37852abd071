#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "koszul/scalar.hpp"

namespace koszul {

/// Dense row-major matrix over an exact field. Acts on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);

    Field field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    /// Matrix * column vector.
    Vector apply(const Vector& v) const;

    /// Keeps the first n rows.
    void truncate_rows(std::size_t n);
    void append_row(std::span<const Scalar> r);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix scaled(const Matrix& m, const Scalar& s);

struct Rref {
    Matrix reduced;  // exactly rank() rows
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
Rref rref(Matrix m);
std::size_t rank(const Matrix& m);

}  // namespace koszul

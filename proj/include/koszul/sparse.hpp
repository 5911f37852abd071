#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

/// Sorted (index, value) list with no explicit zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

/// r += c * v, keeping r sorted and free of zeros.
void axpy(SparseVector& r, const Scalar& c, const SparseVector& v);

/// Column-sparse matrix. Used for cells too large for dense elimination.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(Field f, std::size_t rows, std::size_t cols);

    Field field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_.size(); }
    const SparseVector& column(std::size_t c) const { return cols_[c]; }
    /// Replaces column c (entries are sorted and zero-free on return).
    void set_column(std::size_t c, SparseVector v);
    std::size_t nonzeros() const;

    Matrix to_dense() const;
    static SparseMatrix from_dense(const Matrix& m);

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    bool is_zero() const;

private:
    Field f_;
    std::size_t rows_ = 0;
    std::vector<SparseVector> cols_;
};

/// Exact rank by incremental sparse column echelon.
std::size_t rank(const SparseMatrix& m);

}  // namespace koszul

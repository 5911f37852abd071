#include "koszul/matrix.hpp"

#include "koszul/error.hpp"

namespace koszul {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw NonComposable("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw NonComposable("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw NonComposable("matrix-vector shape mismatch");
    Vector out = zero_vector(f_, rows_);
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero()) nz.push_back(c);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : nz) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero()) out[r].add_mul(a, v[c]);
        }
    return out;
}

void Matrix::truncate_rows(std::size_t n) {
    if (n < rows_) {
        data_.resize(n * cols_);
        rows_ = n;
    }
}

void Matrix::append_row(std::span<const Scalar> r) {
    if (r.size() != cols_) throw NonComposable("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw NonComposable("matrix product shape mismatch");
    Matrix out(a.f_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) out(i, j).add_mul(x, y);
            }
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw NonComposable("matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw NonComposable("matrix difference shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix scaled(const Matrix& m, const Scalar& s) {
    Matrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto& x : out.row(r)) x *= s;
    return out;
}

Rref rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        nz.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (m(r, j).is_zero()) continue;
            m(r, j) *= inv;
            nz.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar factor = m(i, c);
            for (std::size_t j : nz) m(i, j).sub_mul(factor, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

}  // namespace koszul

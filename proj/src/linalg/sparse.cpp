#include "koszul/sparse.hpp"

#include <algorithm>
#include <unordered_map>

#include "koszul/error.hpp"

namespace koszul {

void axpy(SparseVector& r, const Scalar& c, const SparseVector& v) {
    if (c.is_zero() || v.empty()) return;
    SparseVector out;
    out.reserve(r.size() + v.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < v.size()) {
        if (j == v.size() || (i < r.size() && r[i].first < v[j].first)) {
            out.push_back(std::move(r[i++]));
        } else if (i == r.size() || v[j].first < r[i].first) {
            out.emplace_back(v[j].first, c * v[j].second);
            ++j;
        } else {
            Scalar s = std::move(r[i].second);
            s.add_mul(c, v[j].second);
            if (!s.is_zero()) out.emplace_back(v[j].first, std::move(s));
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

SparseMatrix::SparseMatrix(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols) {}

void SparseMatrix::set_column(std::size_t c, SparseVector v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector merged;
    for (auto& e : v) {
        if (e.first >= rows_) throw NonComposable("sparse entry outside the row range");
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
    cols_.at(c) = std::move(merged);
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(f_, rows_, cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (const auto& [r, v] : cols_[c]) m(r, c) = v;
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s(m.field(), m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, c).is_zero()) s.cols_[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
    return s;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw NonComposable("sparse product shape mismatch");
    SparseMatrix out(a.f_, a.rows_, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        SparseVector acc;
        for (const auto& [k, v] : b.cols_[c]) axpy(acc, v, a.cols_[k]);
        out.cols_[c] = std::move(acc);
    }
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

std::size_t rank(const SparseMatrix& m) {
    // Pivot rows are the leading (smallest) indices of the stored reduced columns.
    std::unordered_map<std::uint32_t, SparseVector> pivots;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        SparseVector v = m.column(c);
        while (!v.empty()) {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end()) {
                Scalar inv = v.front().second.inverse();
                for (auto& e : v) e.second *= inv;
                std::uint32_t lead = v.front().first;
                pivots.emplace(lead, std::move(v));
                break;
            }
            Scalar factor = -v.front().second;
            axpy(v, factor, it->second);
        }
    }
    return pivots.size();
}

}  // namespace koszul

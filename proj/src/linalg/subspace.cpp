#include "koszul/subspace.hpp"

#include <algorithm>

#include "koszul/error.hpp"

namespace koszul {

Subspace Subspace::zero(Field f, std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(f, ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(const Matrix& rows) { return from_rref(rref(rows), rows.cols()); }

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& rows) {
    return span(Matrix::from_rows(f, ambient, rows));
}

Subspace Subspace::from_rref(Rref r, std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(r.reduced);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Vector Subspace::residual(const Vector& v) const {
    if (v.size() != ambient_) throw NonComposable("vector length does not match ambient dimension");
    Vector out = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        Scalar c = v[pivots_[k]];
        if (c.is_zero()) continue;
        auto row = basis_.row(k);
        for (std::size_t j = pivots_[k]; j < ambient_; ++j)
            if (!row[j].is_zero()) out[j].sub_mul(c, row[j]);
    }
    return out;
}

bool Subspace::contains(const Vector& v) const { return koszul::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis().row_vector(r))) return false;
    return true;
}

std::optional<Vector> Subspace::try_coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c;
    c.reserve(pivots_.size());
    for (std::size_t p : pivots_) c.push_back(v[p]);
    return c;
}

Vector Subspace::coordinates(const Vector& v) const {
    auto c = try_coordinates(v);
    if (!c) throw NotMember("vector is not in the subspace");
    return *c;
}

Subspace Subspace::extended(const std::vector<Vector>& vectors) const {
    Field f = basis_.field();
    std::vector<Vector> rows;
    rows.reserve(dim() + vectors.size());
    for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_.row_vector(r));
    std::vector<std::size_t> piv = pivots_;

    for (const Vector& v0 : vectors) {
        Vector v = v0;
        for (std::size_t k = 0; k < piv.size(); ++k) {
            Scalar c = v[piv[k]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!rows[k][j].is_zero()) v[j].sub_mul(c, rows[k][j]);
        }
        std::size_t lead = 0;
        while (lead < ambient_ && v[lead].is_zero()) ++lead;
        if (lead == ambient_) continue;
        Scalar inv = v[lead].inverse();
        std::vector<std::size_t> nz;
        for (std::size_t j = lead; j < ambient_; ++j)
            if (!v[j].is_zero()) {
                v[j] *= inv;
                nz.push_back(j);
            }
        for (auto& row : rows) {
            if (row[lead].is_zero()) continue;
            Scalar c = row[lead];
            for (std::size_t j : nz) row[j].sub_mul(c, v[j]);
        }
        auto pos = std::lower_bound(piv.begin(), piv.end(), lead) - piv.begin();
        piv.insert(piv.begin() + pos, lead);
        rows.insert(rows.begin() + pos, std::move(v));
        if (piv.size() == ambient_) break;
    }
    Subspace s;
    s.ambient_ = ambient_;
    s.basis_ = Matrix::from_rows(f, ambient_, rows);
    s.pivots_ = std::move(piv);
    return s;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix& m) {
    Rref r = rref(m);
    const std::size_t n = m.cols();
    Field f = m.field();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> rows;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(f, n);
        v[free] = f.one();
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
        rows.push_back(std::move(v));
    }
    return Subspace::span(f, n, rows);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw NonComposable("intersecting subspaces of different ambients");
    if (a.is_full() || b.is_zero()) return b;
    if (b.is_full() || a.is_zero()) return a;
    // Solve x*A = y*B: kernel of the stacked system [A^T | -B^T].
    const std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
    Field f = a.field();
    Matrix stacked(f, n, da + db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(j, i) = a.basis()(i, j);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(j, da + i) = -b.basis()(i, j);
    Subspace sol = kernel(stacked);
    std::vector<Vector> rows;
    for (std::size_t s = 0; s < sol.dim(); ++s) {
        Vector v = zero_vector(f, n);
        for (std::size_t i = 0; i < da; ++i) {
            const Scalar& c = sol.basis()(s, i);
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!a.basis()(i, j).is_zero()) v[j].add_mul(c, a.basis()(i, j));
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(f, n, rows);
}

Subspace intersect(std::span<const Subspace> spaces) {
    if (spaces.empty()) throw NonComposable("intersection of an empty family");
    Subspace acc = spaces[0];
    for (std::size_t i = 1; i < spaces.size() && !acc.is_zero(); ++i) acc = intersect(acc, spaces[i]);
    return acc;
}

Subspace sum_subspaces(std::span<const Subspace> spaces) {
    if (spaces.empty()) throw NonComposable("sum of an empty family");
    Subspace acc = spaces[0];
    for (std::size_t i = 1; i < spaces.size(); ++i) {
        if (spaces[i].ambient_dim() != acc.ambient_dim()) throw NonComposable("summing subspaces of different ambients");
        if (acc.is_full()) break;
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < spaces[i].dim(); ++r) rows.push_back(spaces[i].basis().row_vector(r));
        acc = acc.extended(rows);
    }
    return acc;
}

QuotientMap::QuotientMap(Subspace s) : s_(std::move(s)) {
    std::vector<bool> piv(s_.ambient_dim(), false);
    for (std::size_t p : s_.pivots()) piv[p] = true;
    for (std::size_t i = 0; i < s_.ambient_dim(); ++i)
        if (!piv[i]) complement_.push_back(i);
}

Vector QuotientMap::project(const Vector& v) const {
    Vector r = s_.residual(v);
    Vector out;
    out.reserve(complement_.size());
    for (std::size_t i : complement_) out.push_back(r[i]);
    return out;
}

Vector QuotientMap::section(const Vector& coords) const {
    if (coords.size() != complement_.size()) throw NonComposable("quotient coordinate length mismatch");
    Vector v = zero_vector(s_.field(), s_.ambient_dim());
    for (std::size_t i = 0; i < complement_.size(); ++i) v[complement_[i]] = coords[i];
    return v;
}

QuotientMap quotient_map(const Subspace& s) { return QuotientMap(s); }

}  // namespace koszul

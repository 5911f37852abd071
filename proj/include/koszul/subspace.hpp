#pragma once

#include <optional>
#include <span>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

/// Subspace of k^n stored as a reduced row echelon basis.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);
    /// Row span of `rows`.
    static Subspace span(const Matrix& rows);
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& rows);
    /// Takes an already reduced echelon basis (unchecked).
    static Subspace from_rref(Rref r, std::size_t ambient);

    Field field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return pivots_.size(); }
    bool is_zero() const noexcept { return pivots_.empty(); }
    bool is_full() const noexcept { return pivots_.size() == ambient_; }

    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// v minus its echelon projection; zero iff v lies in the subspace.
    Vector residual(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coefficients on the basis rows; throws NotMember.
    Vector coordinates(const Vector& v) const;
    std::optional<Vector> try_coordinates(const Vector& v) const;

    /// Span of this subspace and extra vectors, keeping the echelon form.
    Subspace extended(const std::vector<Vector>& vectors) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space of m acting on column vectors (a subspace of k^{cols}).
Subspace kernel(const Matrix& m);
/// Column space of m (a subspace of k^{rows}).
Subspace image(const Matrix& m);

Subspace intersect(std::span<const Subspace> spaces);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_subspaces(std::span<const Subspace> spaces);

/// Projection k^n -> k^n / S using the non-pivot coordinates as complement.
class QuotientMap {
public:
    QuotientMap() = default;
    explicit QuotientMap(Subspace s);

    std::size_t dim() const noexcept { return complement_.size(); }
    const Subspace& subspace() const noexcept { return s_; }
    /// Non-pivot ambient coordinates, ascending.
    const std::vector<std::size_t>& complement() const noexcept { return complement_; }

    Vector project(const Vector& v) const;
    Vector section(const Vector& coords) const;

private:
    Subspace s_;
    std::vector<std::size_t> complement_;
};

QuotientMap quotient_map(const Subspace& s);

}  // namespace koszul

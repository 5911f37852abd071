#pragma once

#include "koszul/subspace.hpp"

namespace koszul {

/// ker(d_out) / im(d_in) with canonical representatives and a coordinate map.
class HomologyBasis {
public:
    HomologyBasis() = default;
    HomologyBasis(Subspace cycles, Subspace boundaries);

    std::size_t dim() const noexcept { return reps_.rows(); }
    std::size_t ambient_dim() const noexcept { return cycles_.ambient_dim(); }
    const Subspace& cycles() const noexcept { return cycles_; }
    const Subspace& boundaries() const noexcept { return boundaries_; }
    /// One representative per row; each is reduced modulo the boundaries.
    const Matrix& representatives() const noexcept { return reps_; }
    Vector representative(std::size_t i) const { return reps_.row_vector(i); }

    /// Class coordinates of a cycle; throws NotMember for non-cycles.
    Vector coordinates(const Vector& cycle) const;
    bool is_boundary(const Vector& v) const { return boundaries_.contains(v); }

private:
    Subspace cycles_;
    Subspace boundaries_;
    Matrix reps_;
    Subspace combined_;  // echelon form of [boundaries; reps]
    Matrix transform_;   // combined-echelon coordinates -> rep coordinates
};

/// Homology at the middle of  C_in --d_in--> C --d_out--> C_out.
HomologyBasis homology(const Matrix& d_out, const Matrix& d_in);

}  // namespace koszul

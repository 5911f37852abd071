#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "koszul/presentation.hpp"
#include "koszul/sparse.hpp"

namespace koszul {

/// Homogeneous element of A_m in the normal-word basis.
struct AlgebraElement {
    std::size_t weight = 0;
    Vector coords;
};

/// One factor of an iterated product in A: a word of V^{⊗len}, or an element of A.
struct Factor {
    std::size_t length = 0;  // weight of the factor
    std::size_t word = 0;    // word index when elem == nullptr
    const Vector* elem = nullptr;

    static Factor letters(std::size_t index, std::size_t len) { return {len, index, nullptr}; }
    static Factor element(const Vector& coords, std::size_t weight) { return {weight, 0, &coords}; }
    static Factor element(const AlgebraElement& a) { return {a.weight, 0, &a.coords}; }
};

/// W_n = ∩ V^{⊗i} ⊗ R ⊗ V^{⊗j} with word-level access to its echelon basis.
struct WSpace {
    std::size_t length = 0;
    Subspace space;
    std::vector<SparseVector> rows;      // nonzero (word, coeff) of each basis row
    std::vector<std::int32_t> pivot_of;  // word -> basis row with that pivot, or -1

    std::size_t dim() const noexcept { return rows.size(); }
};

/// ν(2p') = Np', ν(2p'+1) = Np'+1.
std::size_t nu(std::size_t p, std::size_t n);
/// ν(p+q) = ν(p)+ν(q), which fails exactly when N > 2 and both degrees are odd.
bool nu_additive(std::size_t p, std::size_t q, std::size_t n);
/// Ambient cap (largest tensor length) for g generators.
std::size_t default_tensor_cap(std::size_t g);

/// A = T(V)/(R), graded by weight, with normal forms up to a weight bound.
class GradedAlgebra {
public:
    GradedAlgebra(Presentation p, std::size_t w_max);
    GradedAlgebra(Presentation p, std::size_t w_max, std::size_t tensor_cap);

    const Presentation& presentation() const noexcept { return pres_; }
    Field field() const noexcept { return pres_.field; }
    std::size_t g() const noexcept { return pres_.g(); }
    std::size_t N() const noexcept { return pres_.degree; }
    std::size_t w_max() const noexcept { return w_max_; }
    std::size_t tensor_cap() const noexcept { return cap_; }
    const Subspace& relation_space() const noexcept { return r_; }

    /// Largest nonzero weight if some A_m vanished within the bound.
    std::optional<std::size_t> top_weight() const noexcept { return top_; }
    bool is_finite() const noexcept { return top_.has_value(); }
    /// Weights whose dimension is known (every weight for a finite algebra).
    bool known(std::size_t m) const noexcept { return m <= w_max_ || top_.has_value(); }

    std::size_t dim(std::size_t m) const;
    const Subspace& ideal(std::size_t m) const;
    /// Normal words (non-pivots of I_m), ascending; basis of A_m.
    const std::vector<std::uint32_t>& basis_words(std::size_t m) const;
    /// Normal form of a word of length m in the A_m basis.
    const SparseVector& normal_form(std::size_t m, std::size_t word) const;

    AlgebraElement zero(std::size_t m) const;
    AlgebraElement one() const;
    AlgebraElement basis_element(std::size_t m, std::size_t i) const;
    AlgebraElement word_element(std::span<const Letter> w) const;
    AlgebraElement reduce(const TensorElement& t) const;
    TensorElement lift(const AlgebraElement& a) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    /// out += c * (f_1 f_2 ... f_k); out must have dim(Σ weights) entries.
    void accumulate(std::span<const Factor> factors, const Scalar& c, Vector& out) const;

    std::size_t pow_g(std::size_t k) const;
    const WSpace& W(std::size_t n) const;
    std::size_t nu(std::size_t p) const { return koszul::nu(p, N()); }

    /// dim Z(A)_m; needs weight m+1.
    std::size_t center_dim(std::size_t m) const;

private:
    struct Level {
        Subspace ideal;
        std::vector<std::uint32_t> basis;
        std::vector<SparseVector> nf;
    };
    void build_levels();
    void require_known(std::size_t m) const;
    void accumulate_rec(std::span<const Factor> fs, std::size_t at, std::size_t idx, const Scalar& c,
                        std::size_t total, Vector& out) const;

    Presentation pres_;
    std::size_t w_max_;
    std::size_t cap_;
    Subspace r_;
    std::vector<Level> levels_;
    std::optional<std::size_t> top_;
    std::vector<std::size_t> pow_;

    mutable std::mutex w_mutex_;
    mutable std::vector<std::unique_ptr<WSpace>> w_cache_;
};

}  // namespace koszul

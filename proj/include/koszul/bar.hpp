#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "koszul/class_calculus.hpp"
#include "koszul/random.hpp"

namespace koszul {

/// One tensor slot per entry, each a global index into the normal-word basis of A.
using BarWord = std::vector<std::uint32_t>;
/// Sparse element of a tensor power of A; keys are ordered so iteration is deterministic.
using BarElement = std::map<BarWord, Scalar>;

void add_term(BarElement& e, const BarWord& w, const Scalar& c);
void axpy(BarElement& acc, const Scalar& c, const BarElement& x);
bool is_zero(const BarElement& e);

/// Hochschild cochain Ā^{⊗p} -> A of internal weight n, stored on the tuples of the cell.
struct HochschildCochain {
    std::size_t degree = 0;
    long weight = 0;
    Vector coords;  // in the cochain cell basis
};

/// Normalized bar resolution B̄(A) = A ⊗ Ā^{⊗•} ⊗ A and the Hochschild complexes with
/// coefficients in A. Ā is identified with A_+. For an infinite algebra every
/// computation is windowed: slot weights stay below the algebra bound and cochains are
/// only evaluated on inputs of weight <= input_window, so results are partial.
class BarComplex {
public:
    explicit BarComplex(const GradedAlgebra& a, std::size_t input_window = 0);

    const GradedAlgebra& algebra() const noexcept { return a_; }
    Field field() const noexcept { return a_.field(); }
    bool partial() const noexcept { return !a_.is_finite(); }
    /// Largest slot weight available.
    std::size_t weight_bound() const noexcept { return bound_; }
    /// Largest input weight of a p-cochain.
    std::size_t input_bound(std::size_t p) const;

    std::uint32_t id(std::size_t m, std::size_t i) const;
    std::uint32_t unit() const { return id(0, 0); }
    std::size_t weight_of(std::uint32_t id) const { return weight_of_.at(id); }
    std::size_t local_index(std::uint32_t id) const { return id - offset_[weight_of_.at(id)]; }
    /// Product of two basis elements as (id, coeff) pairs; empty past the top weight.
    const SparseVector& product(std::uint32_t x, std::uint32_t y) const;
    /// Expansion of an algebra element over global ids.
    SparseVector ids_of(const AlgebraElement& e) const;

    // Bimodule bar complex; degree p elements have words of length p + 2.
    BarElement bar_differential(const BarElement& x) const;
    /// s(a_0 ⊗ ... ) = 1 ⊗ ā_0 ⊗ ...; on degree -1 (words of length 1) s(a) = 1 ⊗ a.
    BarElement extra_degeneracy(const BarElement& x) const;
    /// μ : A ⊗ A -> A.
    BarElement augmentation(const BarElement& x) const;
    /// l · x · r for algebra elements acting on the outer slots.
    BarElement act(const SparseVector& l, const BarElement& x, const SparseVector& r) const;

    // Hochschild chains A ⊗ Ā^{⊗p} of total weight w; words (m, a_1, ..., a_p).
    const std::vector<BarWord>& tuples(std::size_t p, std::size_t s) const;
    const std::vector<BarWord>& chain_basis(std::size_t p, std::size_t w) const;
    Vector chain_vector(std::size_t p, std::size_t w, const BarElement& z) const;
    BarElement chain_element(std::size_t p, std::size_t w, const Vector& v) const;
    BarElement hochschild_boundary(const BarElement& z) const;
    Matrix chain_differential(std::size_t p, std::size_t w) const;
    const HomologyBasis& homology(std::size_t p, std::size_t w) const;

    // Hochschild cochains Ā^{⊗p} -> A of internal weight n.
    std::size_t cochain_dim(std::size_t p, long n) const;
    HochschildCochain zero_cochain(std::size_t p, long n) const;
    /// Value on a tuple as coordinates in A_{s+n}; nullopt when the tuple is outside the window.
    std::optional<Vector> value(const HochschildCochain& f, const BarWord& tuple) const;
    void set_value(HochschildCochain& f, const BarWord& tuple, const Vector& v) const;
    HochschildCochain hochschild_coboundary(const HochschildCochain& f) const;
    Matrix cochain_differential(std::size_t p, long n) const;
    const HomologyBasis& cohomology(std::size_t p, long n) const;

    HochschildCochain cup(const HochschildCochain& f, const HochschildCochain& g) const;
    /// f(a_{q-p+1}..a_q) m ⊗ a_1..a_{q-p}.
    BarElement cap_left(const HochschildCochain& f, const BarElement& z) const;
    /// (-1)^{pq} m f(a_1..a_p) ⊗ a_{p+1}..a_q.
    BarElement cap_right(const BarElement& z, const HochschildCochain& f) const;

private:
    struct CochainCell {
        std::vector<BarWord> inputs;
        std::vector<std::size_t> offset;  // start of each input block
        std::vector<std::size_t> out_weight;
        std::map<BarWord, std::size_t> where;
        std::size_t dim = 0;
    };
    const CochainCell& cochain_cell(std::size_t p, long n) const;
    void require_slot(std::size_t w) const;

    const GradedAlgebra& a_;
    std::size_t window_;
    std::size_t bound_;
    std::vector<std::size_t> offset_;
    std::vector<std::size_t> weight_of_;

    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, SparseVector> products_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<std::vector<BarWord>>> tuples_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<std::vector<BarWord>>> chains_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<std::map<BarWord, std::size_t>>> chain_index_;
    mutable std::map<std::pair<std::size_t, long>, std::unique_ptr<CochainCell>> cochain_cells_;
    mutable std::map<std::tuple<int, std::size_t, long>, std::unique_ptr<HomologyBasis>> cells_;
};

/// The comparison morphism χ : K(A) -> B̄(A) built from the extra degeneracy, with its
/// induced maps χ̃ on chains and χ* on cochains.
class Comparison {
public:
    Comparison(const KoszulComplex& k, const BarComplex& b, std::size_t p_max);

    const KoszulComplex& complex() const noexcept { return k_; }
    const BarComplex& bar() const noexcept { return b_; }
    std::size_t p_max() const noexcept { return chi_.size() - 1; }

    /// χ_p(1 ⊗ ω_j ⊗ 1) for the j-th basis vector of W_{ν(p)}.
    const BarElement& chi(std::size_t p, std::size_t j) const { return chi_.at(p).at(j); }
    /// χ_{p-1}(d(1 ⊗ ω_j ⊗ 1)).
    BarElement chi_of_boundary(std::size_t p, std::size_t j) const;
    /// b′ χ_p = χ_{p-1} d on every generator of K_p.
    bool square_commutes(std::size_t p) const;

    BarElement chi_tilde(const KoszulChain& z) const;
    Matrix chi_tilde_matrix(std::size_t p, std::size_t w) const;
    KoszulCochain chi_star(const HochschildCochain& f) const;
    Matrix chi_star_matrix(std::size_t p, long n) const;

    /// b χ̃_p = χ̃_{p-1} b_K on the cell (p, w).
    bool chain_square_commutes(std::size_t p, std::size_t w) const;
    /// χ*_{p+1} b = b_K χ*_p on the cell (p, n).
    bool cochain_square_commutes(std::size_t p, long n) const;

    /// H(χ̃) : HK_p(w) -> HH_p(w) in class coordinates.
    Matrix homology_map(std::size_t p, std::size_t w) const;
    /// H(χ*) : HH^p(n) -> HK^p(n) in class coordinates.
    Matrix cohomology_map(std::size_t p, long n) const;

private:
    const KoszulComplex& k_;
    const BarComplex& b_;
    std::vector<std::vector<BarElement>> chi_;
};

/// Closed form of χ_p(1 ⊗ x^{ν(p)} ⊗ 1) for k[x]/(x^N).
BarElement chi_closed_form_truncated(const BarComplex& b, std::size_t p);
bool is_truncated_polynomial(const GradedAlgebra& a);

struct ContractionReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t s_squared_failures = 0;
};
/// b′s + sb′ = id (with s_{-1}μ in degree 0) and s² = 0 on random basis elements of B̄_p, p <= p_max.
ContractionReport contraction_check(const BarComplex& b, Rng& rng, std::size_t p_max, std::size_t trials);

struct IsoCell {
    std::string side;
    std::size_t degree = 0;
    long weight = 0;
    std::size_t koszul_dim = 0;
    std::size_t hochschild_dim = 0;
    bool iso = false;
};
/// H(χ̃)_p and H(χ*)_p for p = 0, 1 over the given weight ranges.
std::vector<IsoCell> low_degree_iso_check(const Comparison& c, std::size_t w_hi, long n_lo, long n_hi);

struct NonMorphismWitness {
    bool chi_star_f_zero = false;
    Vector chi_star_f_cup_d;  // χ*(f ⌣ D_A)(x^N) in A_{N-2}
    Vector expected_cup;      // -x^{N-2}
    BarElement chi_tilde_z_cap_f;
    BarElement expected_cap;  // x^{N-2} ⊗ x
    bool cup_matches = false;
    bool cap_matches = false;
};
/// The witnesses that χ* is not multiplicative and χ̃ not a bimodule map, for k[x]/(x^N), N > 2.
NonMorphismWitness non_morphism_witness(const Comparison& c);

struct ClassMorphismReport {
    std::size_t cup_checks = 0, cup_failures = 0;
    std::size_t cap_checks = 0, cap_failures = 0;
    std::size_t iso_cells = 0, iso_failures = 0;
};
/// H(χ*) is an isomorphism intertwining cup products, and H(χ̃) intertwines the cap
/// actions, on all class cells with total degree <= p_max.
ClassMorphismReport class_morphism_check(const Comparison& c, const ClassCalculus& cc, std::size_t p_max);

}  // namespace koszul

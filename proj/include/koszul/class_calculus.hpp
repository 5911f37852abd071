#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "koszul/calculus.hpp"
#include "koszul/tables.hpp"

namespace koszul {

/// Products induced on Koszul (co)homology classes, in the canonical class bases.
/// Class coordinates are relative to the HomologyBasis of the cell; structure constants
/// are matrices whose column i*d2 + j holds the class of (basis_i * basis_j).
class ClassCalculus {
public:
    explicit ClassCalculus(const KoszulComplex& k, Coefficients c = Coefficients::Algebra);

    const KoszulComplex& complex() const noexcept { return k_; }
    Coefficients coefficients() const noexcept { return c_; }

    const HomologyBasis& cohomology(std::size_t p, long n) const { return k_.cohomology(c_, p, n); }
    const HomologyBasis& homology(std::size_t q, std::size_t w) const { return k_.homology(c_, q, w); }

    KoszulCochain cocycle(std::size_t p, long n, const Vector& class_coords) const;
    KoszulCochain cocycle(std::size_t p, long n, std::size_t i) const;
    KoszulChain cycle(std::size_t q, std::size_t w, const Vector& class_coords) const;
    KoszulChain cycle(std::size_t q, std::size_t w, std::size_t i) const;

    Vector cohomology_class(const KoszulCochain& f) const;
    Vector homology_class(const KoszulChain& z) const;

    /// [α] ⌣ [β] for α ∈ HK^p(n1), β ∈ HK^q(n2).
    const Matrix& cup_constants(std::size_t p, long n1, std::size_t q, long n2) const;
    /// [α] ⌢ [γ] for α ∈ HK^p(n), γ ∈ HK_q(w).
    const Matrix& cap_left_constants(std::size_t p, long n, std::size_t q, std::size_t w) const;
    /// [γ] ⌢ [α] for γ ∈ HK_q(w), α ∈ HK^p(n).
    const Matrix& cap_right_constants(std::size_t q, std::size_t w, std::size_t p, long n) const;

    /// ∂⌣ = [e_A] ⌣ - : HK^p(n) -> HK^{p+1}(n).
    const Matrix& partial_cup(std::size_t p, long n) const;
    /// ∂⌢ = [e_A] ⌢ - : HK_q(w) -> HK_{q-1}(w); zero map out of q = 0.
    const Matrix& partial_cap(std::size_t q, std::size_t w) const;

private:
    using Key = std::tuple<int, std::size_t, long, std::size_t, long>;
    template <class Build>
    const Matrix& cached(const Key& key, Build build) const;

    const KoszulComplex& k_;
    Coefficients c_;
    mutable std::mutex mutex_;
    mutable std::map<Key, std::unique_ptr<Matrix>> cache_;
};

/// Total class-level product of representatives of the given class vectors.
Vector product_of_classes(const Matrix& constants, const Vector& a, const Vector& b);

/// Higher Koszul (co)homology: homology of HK under ∂⌣ (cohomology) or ∂⌢ (homology).
struct HigherTable {
    Side side = Side::Homology;
    std::size_t p_max = 0;
    bool complete = true;
    bool squares_zero = true;  // ∂² = 0 on every class cell used
    std::vector<HkEntry> entries;
    std::vector<HkEntry> ordinary;  // the underlying HK dims on the same window

    std::size_t total(std::size_t p) const;
};

HigherTable higher_table(const ClassCalculus& cc, Side s, std::size_t p_max);

enum class EulerOperator { CupLeft, CupRight, CapLeft, CapRight };
std::string to_string(EulerOperator op);

/// f, e_A⌣f, e_A⌣(e_A⌣f), ... : element i of the result is the i-th iterate (i = 0..count).
std::vector<KoszulCochain> euler_iterates(const KoszulComplex& k, EulerOperator op, const KoszulCochain& f,
                                          std::size_t count);
/// Chain version; the list stops early once the degree reaches 0 (further iterates vanish).
std::vector<KoszulChain> euler_iterates(const KoszulComplex& k, EulerOperator op, const KoszulChain& z,
                                        std::size_t count);

struct BracketCell {
    std::string kind;  // "cup" or "cap"
    std::size_t p = 0, q = 0;
    long weight_p = 0, weight_q = 0;
    std::size_t pairs = 0;  // number of basis pairs evaluated
    std::size_t rank = 0;   // rank of the bracket structure matrix (0 means all brackets vanish)
    bool proven_zero = false;
};

/// Class-level brackets [α,β]⌣ and [α,γ]⌢ over all nonzero cells with degrees <= p_max.
std::vector<BracketCell> bracket_experiment(const ClassCalculus& cc, std::size_t p_max);

}  // namespace koszul

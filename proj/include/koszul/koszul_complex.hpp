#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "koszul/graded_algebra.hpp"
#include "koszul/homology.hpp"

namespace koszul {

/// Coefficient bimodule: M = A, or M = k through the augmentation.
enum class Coefficients { Algebra, Field };
enum class Side { Homology, Cohomology };

std::string to_string(Coefficients c);
std::string to_string(Side s);
/// Both operands in A stay in A; anything touching k lands in k.
inline Coefficients combine(Coefficients a, Coefficients b) {
    return a == Coefficients::Algebra && b == Coefficients::Algebra ? Coefficients::Algebra : Coefficients::Field;
}

/// Element of M ⊗ W_{ν(p)} of total weight `weight`.
/// coords[i * dim W + k] is the coefficient of (basis i of M_{weight - ν(p)}) ⊗ (basis row k of W).
struct KoszulChain {
    Coefficients coefficients = Coefficients::Algebra;
    std::size_t degree = 0;
    std::size_t weight = 0;
    Vector coords;
};

/// Linear map W_{ν(p)} -> M_{ν(p)+n}; `weight` is the internal weight n.
/// values(i, k) is the coefficient of basis i of M in the image of basis row k of W.
struct KoszulCochain {
    Coefficients coefficients = Coefficients::Algebra;
    std::size_t degree = 0;
    long weight = 0;
    Matrix values;
};

/// d(1 ⊗ ω ⊗ 1) for a basis row ω of W: Σ coeff · left ⊗ ω_j ⊗ right with word factors.
struct BimoduleTerm {
    std::size_t left_word = 0, left_len = 0;
    std::size_t w_index = 0;
    std::size_t right_word = 0, right_len = 0;
    Scalar coeff;
};

/// The Koszul bimodule complex K(A) and the complexes M ⊗_{A^e} K(A), Hom_{A^e}(K(A), M).
class KoszulComplex {
public:
    explicit KoszulComplex(const GradedAlgebra& a) : a_(a) {}
    KoszulComplex(const KoszulComplex&) = delete;
    KoszulComplex& operator=(const KoszulComplex&) = delete;

    const GradedAlgebra& algebra() const noexcept { return a_; }
    Field field() const noexcept { return a_.field(); }
    std::size_t nu(std::size_t p) const { return a_.nu(p); }
    std::size_t w_dim(std::size_t p) const { return a_.W(nu(p)).dim(); }

    // Coefficient module.
    std::size_t module_dim(Coefficients c, long m) const;
    bool module_known(Coefficients c, long m) const;
    /// Normal word standing for basis element i of M_m.
    std::size_t module_word(Coefficients c, std::size_t m, std::size_t i) const;
    /// out += coeff * product of factors, computed in M.
    void module_accumulate(Coefficients c, std::span<const Factor> fs, const Scalar& coeff, Vector& out) const;

    std::size_t chain_dim(Coefficients c, std::size_t p, std::size_t w) const;
    std::size_t cochain_dim(Coefficients c, std::size_t p, long n) const;
    KoszulChain zero_chain(Coefficients c, std::size_t p, std::size_t w) const;
    KoszulCochain zero_cochain(Coefficients c, std::size_t p, long n) const;
    KoszulChain chain(Coefficients c, std::size_t p, std::size_t w, Vector coords) const;
    KoszulCochain cochain(Coefficients c, std::size_t p, long n, const Vector& flat) const;
    static Vector flatten(const KoszulCochain& f);

    /// b_K on M ⊗ W, degree p -> p-1 (zero chain in degree 0 has no target; throws).
    KoszulChain boundary(const KoszulChain& z) const;
    /// b_K on Hom(W, M), degree p -> p+1.
    KoszulCochain coboundary(const KoszulCochain& f) const;

    Matrix chain_differential(Coefficients c, std::size_t p, std::size_t w) const;
    Matrix cochain_differential(Coefficients c, std::size_t p, long n) const;

    const HomologyBasis& homology(Coefficients c, std::size_t p, std::size_t w) const;
    const HomologyBasis& cohomology(Coefficients c, std::size_t p, long n) const;

    // Bimodule complex.
    std::vector<BimoduleTerm> bimodule_generator_d(std::size_t p, std::size_t k) const;
    std::size_t bimodule_dim(std::size_t p, std::size_t w) const;
    /// Index of (basis i of A_a) ⊗ (row k of W_{ν(p)}) ⊗ (basis j of A_b) in K_p at weight w.
    std::size_t bimodule_index(std::size_t p, std::size_t w, std::size_t a, std::size_t i, std::size_t k,
                               std::size_t j) const;
    /// d : K_p -> K_{p-1} at weight w.
    SparseMatrix bimodule_d(std::size_t p, std::size_t w) const;

private:
    const GradedAlgebra& a_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<int, int, std::size_t, long>, std::unique_ptr<HomologyBasis>> cells_;
};

/// Word x_1 ... x_n as an index; sub(a, b) is x_a ... x_b (1-based, inclusive, empty when b < a).
class WordView {
public:
    WordView(const GradedAlgebra& a, std::size_t word, std::size_t n) : a_(&a), w_(word), n_(n) {}
    std::size_t index(std::size_t from, std::size_t to) const {
        if (to < from) return 0;
        return (w_ / a_->pow_g(n_ - to)) % a_->pow_g(to - from + 1);
    }
    Factor sub(std::size_t from, std::size_t to) const {
        return Factor::letters(index(from, to), to < from ? 0 : to - from + 1);
    }
    std::size_t length() const noexcept { return n_; }

private:
    const GradedAlgebra* a_;
    std::size_t w_;
    std::size_t n_;
};

/// Cochain values extended to all of V^{⊗ν(p)}: nonzero only on pivot words of W.
class CochainEval {
public:
    CochainEval(const KoszulComplex& k, const KoszulCochain& f);
    /// Value on the sub-word x_from..x_to, or nullptr when that word is not a pivot.
    const Vector* value(const WordView& w, std::size_t from, std::size_t to) const;
    std::size_t value_weight() const noexcept { return vw_; }
    Factor factor(const Vector* v) const { return Factor::element(*v, vw_); }

private:
    const WSpace* ws_;
    std::vector<Vector> cols_;
    std::size_t vw_ = 0;
};

/// Accumulates M-valued coefficients per W-basis row and reads off pivots.
class ChainAccumulator {
public:
    ChainAccumulator(const KoszulComplex& k, Coefficients c, std::size_t p, std::size_t w);
    /// Adds coeff * (product of factors) ⊗ word, where the word has length ν(p).
    void add(std::span<const Factor> fs, const Scalar& coeff, std::size_t word);
    KoszulChain finish() const;

private:
    const KoszulComplex& k_;
    Coefficients c_;
    std::size_t p_, w_;
    const WSpace* ws_;
    std::vector<Vector> acc_;
};

}  // namespace koszul

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "koszul/subspace.hpp"

namespace koszul {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// g^m, throwing ResourceCapError on overflow of the word index range.
std::size_t word_count(std::size_t g, std::size_t m);

/// Words of length m over g letters, indexed big-endian (first letter most significant).
struct WordBasis {
    std::size_t generators = 0;
    std::size_t length = 0;

    std::size_t dim() const { return word_count(generators, length); }
    std::size_t index(std::span<const Letter> w) const;
    Word word(std::size_t index) const;
};

/// Element of V^{⊗m} in the word basis.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(Field f, std::size_t g, std::size_t m);
    TensorElement(std::size_t g, std::size_t m, Vector coeffs);

    static TensorElement word(Field f, std::size_t g, std::span<const Letter> w);

    Field field() const { return f_; }
    std::size_t generators() const noexcept { return g_; }
    std::size_t weight() const noexcept { return m_; }
    const Vector& coefficients() const noexcept { return c_; }
    Vector& coefficients() noexcept { return c_; }

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Scalar& s);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.g_ == b.g_ && a.m_ == b.m_ && a.c_ == b.c_;
    }

private:
    Field f_;
    std::size_t g_ = 0;
    std::size_t m_ = 0;
    Vector c_;
};

TensorElement concat(const TensorElement& a, const TensorElement& b);

/// U ⊗ W inside V^{⊗(a+b)}; the Kronecker product of echelon bases is already echelon.
Subspace tensor_subspaces(const Subspace& u, const Subspace& w);
/// V^{⊗i} ⊗ R ⊗ V^{⊗j}.
Subspace padded_relation_space(std::size_t g, std::size_t i, const Subspace& r, std::size_t j);

}  // namespace koszul

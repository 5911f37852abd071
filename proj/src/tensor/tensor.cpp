#include "koszul/tensor.hpp"

#include <limits>

#include "koszul/error.hpp"

namespace koszul {

std::size_t word_count(std::size_t g, std::size_t m) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (g != 0 && n > std::numeric_limits<std::uint32_t>::max() / g)
            throw ResourceCapError("V^{⊗" + std::to_string(m) + "} is too large to index");
        n *= g;
    }
    return n;
}

std::size_t WordBasis::index(std::span<const Letter> w) const {
    if (w.size() != length) throw NonComposable("word length mismatch");
    std::size_t idx = 0;
    for (Letter l : w) {
        if (l >= generators) throw NonComposable("letter out of range");
        idx = idx * generators + l;
    }
    return idx;
}

Word WordBasis::word(std::size_t index) const {
    Word w(length);
    for (std::size_t k = length; k-- > 0;) {
        w[k] = static_cast<Letter>(index % generators);
        index /= generators;
    }
    return w;
}

TensorElement::TensorElement(Field f, std::size_t g, std::size_t m)
    : f_(f), g_(g), m_(m), c_(zero_vector(f, word_count(g, m))) {}

TensorElement::TensorElement(std::size_t g, std::size_t m, Vector coeffs) : g_(g), m_(m), c_(std::move(coeffs)) {
    if (c_.size() != word_count(g, m)) throw NonComposable("tensor coefficient length mismatch");
    if (!c_.empty()) f_ = c_.front().field();
}

TensorElement TensorElement::word(Field f, std::size_t g, std::span<const Letter> w) {
    TensorElement t(f, g, w.size());
    t.c_[WordBasis{g, w.size()}.index(w)] = f.one();
    return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (o.g_ != g_ || o.m_ != m_) throw NonComposable("adding tensors of different shapes");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (o.g_ != g_ || o.m_ != m_) throw NonComposable("subtracting tensors of different shapes");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TensorElement concat(const TensorElement& a, const TensorElement& b) {
    if (a.generators() != b.generators()) throw NonComposable("concatenating tensors over different alphabets");
    TensorElement out(a.field(), a.generators(), a.weight() + b.weight());
    const std::size_t nb = b.coefficients().size();
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (a.coefficients()[i].is_zero()) continue;
        for (std::size_t j = 0; j < nb; ++j)
            if (!b.coefficients()[j].is_zero())
                out.coefficients()[i * nb + j].add_mul(a.coefficients()[i], b.coefficients()[j]);
    }
    return out;
}

Subspace tensor_subspaces(const Subspace& u, const Subspace& w) {
    Field f = u.field();
    const std::size_t nu = u.ambient_dim(), nw = w.ambient_dim();
    if (u.is_full() && w.is_full()) return Subspace::full(f, nu * nw);
    Matrix basis(f, u.dim() * w.dim(), nu * nw);
    std::vector<std::size_t> piv;
    piv.reserve(u.dim() * w.dim());
    std::size_t row = 0;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t k = 0; k < w.dim(); ++k, ++row) {
            for (std::size_t a = 0; a < nu; ++a) {
                const Scalar& x = u.basis()(i, a);
                if (x.is_zero()) continue;
                for (std::size_t b = 0; b < nw; ++b)
                    if (!w.basis()(k, b).is_zero()) basis(row, a * nw + b) = x * w.basis()(k, b);
            }
            piv.push_back(u.pivots()[i] * nw + w.pivots()[k]);
        }
    return Subspace::from_rref({std::move(basis), std::move(piv)}, nu * nw);
}

Subspace padded_relation_space(std::size_t g, std::size_t i, const Subspace& r, std::size_t j) {
    Field f = r.field();
    Subspace left = Subspace::full(f, word_count(g, i));
    Subspace right = Subspace::full(f, word_count(g, j));
    return tensor_subspaces(tensor_subspaces(left, r), right);
}

}  // namespace koszul

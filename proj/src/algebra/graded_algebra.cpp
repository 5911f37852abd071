#include "koszul/graded_algebra.hpp"

#include <limits>

#include "koszul/error.hpp"

namespace koszul {

std::size_t nu(std::size_t p, std::size_t n) { return (p / 2) * n + (p % 2); }

bool nu_additive(std::size_t p, std::size_t q, std::size_t n) { return nu(p + q, n) == nu(p, n) + nu(q, n); }

std::size_t default_tensor_cap(std::size_t g) { return g <= 1 ? 1024 : g == 2 ? 14 : 9; }

GradedAlgebra::GradedAlgebra(Presentation p, std::size_t w_max) : GradedAlgebra(p, w_max, default_tensor_cap(p.g())) {}

GradedAlgebra::GradedAlgebra(Presentation p, std::size_t w_max, std::size_t tensor_cap)
    : pres_(std::move(p)), w_max_(w_max), cap_(tensor_cap) {
    validate(pres_);
    if (w_max_ > cap_)
        throw ResourceCapError("weight bound " + std::to_string(w_max_) + " exceeds the tensor cap " +
                               std::to_string(cap_) + " for g = " + std::to_string(g()));
    pow_.push_back(1);
    while (pow_.size() <= cap_ && pow_.back() <= std::numeric_limits<std::uint32_t>::max() / g())
        pow_.push_back(pow_.back() * g());
    const std::size_t amb = word_count(g(), N());
    std::vector<Vector> rows;
    for (const auto& r : pres_.relations) rows.push_back(r.coefficients());
    r_ = Subspace::span(field(), amb, rows);
    build_levels();
}

void GradedAlgebra::build_levels() {
    const Field f = field();
    const std::size_t g = this->g(), n = N();
    for (std::size_t m = 0; m <= w_max_; ++m) {
        Level lv;
        const std::size_t amb = word_count(g, m);
        if (m < n) {
            lv.ideal = Subspace::zero(f, amb);
        } else if (m == n) {
            lv.ideal = r_;
        } else {
            // I_m = I_{m-1} ⊗ V + V^{⊗(m-N)} ⊗ R
            Subspace base = tensor_subspaces(levels_[m - 1].ideal, Subspace::full(f, g));
            if (!base.is_full() && !r_.is_zero()) {
                Subspace extra = padded_relation_space(g, m - n, r_, 0);
                std::vector<Vector> vs;
                vs.reserve(extra.dim());
                for (std::size_t i = 0; i < extra.dim(); ++i) vs.push_back(extra.basis().row_vector(i));
                base = base.extended(vs);
            }
            lv.ideal = std::move(base);
        }
        std::vector<std::int32_t> pos(amb, -1);
        for (std::size_t k = 0; k < lv.ideal.dim(); ++k) pos[lv.ideal.pivots()[k]] = static_cast<std::int32_t>(k);
        std::vector<std::int32_t> nonpivot_index(amb, -1);
        for (std::size_t w = 0; w < amb; ++w)
            if (pos[w] < 0) {
                nonpivot_index[w] = static_cast<std::int32_t>(lv.basis.size());
                lv.basis.push_back(static_cast<std::uint32_t>(w));
            }
        lv.nf.resize(amb);
        for (std::size_t w = 0; w < amb; ++w) {
            if (pos[w] < 0) {
                lv.nf[w].emplace_back(static_cast<std::uint32_t>(nonpivot_index[w]), f.one());
                continue;
            }
            auto row = lv.ideal.basis().row(static_cast<std::size_t>(pos[w]));
            for (std::size_t j = w + 1; j < amb; ++j)
                if (!row[j].is_zero() && nonpivot_index[j] >= 0)
                    lv.nf[w].emplace_back(static_cast<std::uint32_t>(nonpivot_index[j]), -row[j]);
        }
        bool vanished = lv.basis.empty();
        levels_.push_back(std::move(lv));
        if (vanished) {
            top_ = m - 1;
            break;
        }
    }
}

void GradedAlgebra::require_known(std::size_t m) const {
    if (!known(m))
        throw BoundsError("weight " + std::to_string(m) + " is beyond the computed bound w_max = " +
                          std::to_string(w_max_));
}

std::size_t GradedAlgebra::dim(std::size_t m) const {
    require_known(m);
    return m < levels_.size() ? levels_[m].basis.size() : 0;
}

const Subspace& GradedAlgebra::ideal(std::size_t m) const {
    require_known(m);
    if (m >= levels_.size()) throw BoundsError("ideal above the vanishing weight is the full tensor space");
    return levels_[m].ideal;
}

const std::vector<std::uint32_t>& GradedAlgebra::basis_words(std::size_t m) const {
    static const std::vector<std::uint32_t> empty;
    require_known(m);
    return m < levels_.size() ? levels_[m].basis : empty;
}

const SparseVector& GradedAlgebra::normal_form(std::size_t m, std::size_t word) const {
    static const SparseVector empty;
    require_known(m);
    if (m >= levels_.size()) return empty;
    return levels_[m].nf.at(word);
}

AlgebraElement GradedAlgebra::zero(std::size_t m) const { return {m, zero_vector(field(), dim(m))}; }

AlgebraElement GradedAlgebra::one() const {
    AlgebraElement e = zero(0);
    e.coords[0] = field().one();
    return e;
}

AlgebraElement GradedAlgebra::basis_element(std::size_t m, std::size_t i) const {
    AlgebraElement e = zero(m);
    e.coords.at(i) = field().one();
    return e;
}

AlgebraElement GradedAlgebra::word_element(std::span<const Letter> w) const {
    AlgebraElement e = zero(w.size());
    if (e.coords.empty()) return e;
    for (const auto& [b, v] : normal_form(w.size(), WordBasis{g(), w.size()}.index(w))) e.coords[b] += v;
    return e;
}

AlgebraElement GradedAlgebra::reduce(const TensorElement& t) const {
    AlgebraElement e = zero(t.weight());
    if (e.coords.empty()) return e;
    for (std::size_t w = 0; w < t.coefficients().size(); ++w) {
        const Scalar& c = t.coefficients()[w];
        if (c.is_zero()) continue;
        for (const auto& [b, v] : normal_form(t.weight(), w)) e.coords[b].add_mul(c, v);
    }
    return e;
}

TensorElement GradedAlgebra::lift(const AlgebraElement& a) const {
    TensorElement t(field(), g(), a.weight);
    const auto& words = basis_words(a.weight);
    for (std::size_t i = 0; i < a.coords.size(); ++i) t.coefficients()[words[i]] = a.coords[i];
    return t;
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out = zero(a.weight + b.weight);
    Factor fs[2] = {Factor::element(a), Factor::element(b)};
    accumulate(fs, field().one(), out.coords);
    return out;
}

std::size_t GradedAlgebra::pow_g(std::size_t k) const {
    if (k >= pow_.size()) throw ResourceCapError("word length " + std::to_string(k) + " exceeds the tensor cap");
    return pow_[k];
}

void GradedAlgebra::accumulate(std::span<const Factor> factors, const Scalar& c, Vector& out) const {
    if (c.is_zero()) return;
    std::size_t total = 0;
    for (const auto& f : factors) total += f.length;
    require_known(total);
    if (total >= levels_.size()) return;  // A_total = 0
    if (out.size() != levels_[total].basis.size()) throw NonComposable("product accumulator has the wrong size");
    accumulate_rec(factors, 0, 0, c, total, out);
}

void GradedAlgebra::accumulate_rec(std::span<const Factor> fs, std::size_t at, std::size_t idx, const Scalar& c,
                                   std::size_t total, Vector& out) const {
    while (at < fs.size() && fs[at].elem == nullptr) {
        idx = idx * pow_[fs[at].length] + fs[at].word;
        ++at;
    }
    if (at == fs.size()) {
        for (const auto& [b, v] : levels_[total].nf[idx]) out[b].add_mul(c, v);
        return;
    }
    const Factor& f = fs[at];
    const auto& words = basis_words(f.length);
    const std::size_t shift = pow_[f.length];
    for (std::size_t j = 0; j < f.elem->size(); ++j) {
        const Scalar& x = (*f.elem)[j];
        if (x.is_zero()) continue;
        accumulate_rec(fs, at + 1, idx * shift + words[j], c * x, total, out);
    }
}

const WSpace& GradedAlgebra::W(std::size_t n) const {
    if (n > cap_)
        throw ResourceCapError("W_" + std::to_string(n) + " exceeds the tensor cap " + std::to_string(cap_));
    std::lock_guard lock(w_mutex_);
    const Field f = field();
    const std::size_t g = this->g(), deg = N();
    while (w_cache_.size() <= n) {
        const std::size_t m = w_cache_.size();
        auto ws = std::make_unique<WSpace>();
        ws->length = m;
        const std::size_t amb = word_count(g, m);
        if (m < deg)
            ws->space = Subspace::full(f, amb);
        else if (m == deg)
            ws->space = r_;
        else
            // W_m = (W_{m-1} ⊗ V) ∩ (V^{⊗(m-N)} ⊗ R)
            ws->space = intersect(tensor_subspaces(w_cache_[m - 1]->space, Subspace::full(f, g)),
                                  padded_relation_space(g, m - deg, r_, 0));
        ws->pivot_of.assign(amb, -1);
        for (std::size_t k = 0; k < ws->space.dim(); ++k) {
            ws->pivot_of[ws->space.pivots()[k]] = static_cast<std::int32_t>(k);
            SparseVector row;
            auto r = ws->space.basis().row(k);
            for (std::size_t w = 0; w < amb; ++w)
                if (!r[w].is_zero()) row.emplace_back(static_cast<std::uint32_t>(w), r[w]);
            ws->rows.push_back(std::move(row));
        }
        w_cache_.push_back(std::move(ws));
    }
    return *w_cache_[n];
}

std::size_t GradedAlgebra::center_dim(std::size_t m) const {
    const std::size_t d = dim(m), d1 = dim(m + 1), g = this->g();
    Matrix comm(field(), g * d1, d);
    for (std::size_t i = 0; i < d; ++i) {
        AlgebraElement z = basis_element(m, i);
        for (std::size_t x = 0; x < g; ++x) {
            Vector acc = zero_vector(field(), d1);
            Factor zx[2] = {Factor::element(z), Factor::letters(x, 1)};
            Factor xz[2] = {Factor::letters(x, 1), Factor::element(z)};
            accumulate(zx, field().one(), acc);
            accumulate(xz, -field().one(), acc);
            for (std::size_t r = 0; r < d1; ++r) comm(x * d1 + r, i) = acc[r];
        }
    }
    return kernel(comm).dim();
}

}  // namespace koszul

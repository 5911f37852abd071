#include "koszul/calculus.hpp"
#include "koszul/error.hpp"

namespace koszul {

bool is_koszul_derivation(const KoszulComplex& k, const KoszulCochain& f) {
    // Σ_i x_1..x_i f(x_{i+1}) x_{i+2}..x_N = 0 on R is exactly b_K(f) = 0 in degree 1.
    return f.degree == 1 && f.coefficients == Coefficients::Algebra && is_zero(k.coboundary(f));
}

Matrix derivation_matrix(const KoszulComplex& k, const KoszulCochain& f, std::size_t m) {
    if (f.degree != 1 || f.coefficients != Coefficients::Algebra)
        throw NonComposable("derivations extend A-valued 1-cochains");
    const GradedAlgebra& a = k.algebra();
    const long target = static_cast<long>(m) + f.weight;
    const std::size_t rows = target < 0 ? 0 : a.dim(static_cast<std::size_t>(target));
    Matrix d(k.field(), rows, a.dim(m));
    if (rows == 0 || f.values.rows() == 0) return d;
    CochainEval fv(k, f);
    const auto& words = a.basis_words(m);
    for (std::size_t b = 0; b < words.size(); ++b) {
        WordView s(a, words[b], m);
        Vector acc = zero_vector(k.field(), rows);
        // D_f(s_1..s_m) = Σ_t s_1..s_{t-1} f(s_t) s_{t+1}..s_m
        for (std::size_t t = 1; t <= m; ++t) {
            const Vector* v = fv.value(s, t, t);
            if (!v) continue;
            Factor fs[3] = {s.sub(1, t - 1), fv.factor(v), s.sub(t + 1, m)};
            a.accumulate(fs, k.field().one(), acc);
        }
        d.set_column(b, acc);
    }
    return d;
}

KoszulCochain derivation_compose(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g) {
    if (g.coefficients != Coefficients::Algebra) throw NonComposable("D_f acts on A-valued cochains");
    KoszulCochain out = k.zero_cochain(Coefficients::Algebra, g.degree, f.weight + g.weight);
    if (out.values.rows() == 0 || g.values.rows() == 0) return out;
    const std::size_t m = static_cast<std::size_t>(static_cast<long>(k.nu(g.degree)) + g.weight);
    out.values = derivation_matrix(k, f, m) * g.values;
    return out;
}

KoszulChain derivation_apply(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z) {
    if (z.coefficients != Coefficients::Algebra) throw NonComposable("D_f acts on A-valued chains");
    const long ow = static_cast<long>(z.weight) + f.weight;
    if (ow < 0) throw NonComposable("D_f(z) lands in negative weight");
    KoszulChain out = k.zero_chain(Coefficients::Algebra, z.degree, static_cast<std::size_t>(ow));
    const std::size_t n = k.nu(z.degree);
    if (out.coords.empty() || z.weight < n) return out;
    Matrix d = derivation_matrix(k, f, z.weight - n);
    const std::size_t dw = k.w_dim(z.degree);
    for (std::size_t idx = 0; idx < z.coords.size(); ++idx) {
        const Scalar& c = z.coords[idx];
        if (c.is_zero()) continue;
        const std::size_t i = idx / dw, kk = idx % dw;
        for (std::size_t r = 0; r < d.rows(); ++r)
            if (!d(r, i).is_zero()) out.coords[r * dw + kk].add_mul(c, d(r, i));
    }
    return out;
}

KoszulCochain derbra_cochain_residual(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g) {
    KoszulCochain r = cup_bracket(k, f, g);
    axpy(r, -k.field().one(), k.coboundary(derivation_compose(k, f, g)));
    return r;
}

KoszulChain derbra_chain_residual(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z) {
    KoszulChain r = cap_bracket(k, f, z);
    axpy(r, -k.field().one(), k.boundary(derivation_apply(k, f, z)));
    return r;
}

}  // namespace koszul

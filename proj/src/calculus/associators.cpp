#include "koszul/calculus.hpp"
#include "koszul/error.hpp"

namespace koszul {

KoszulCochain associator_cup(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g,
                             const KoszulCochain& h) {
    KoszulCochain out = cup(k, cup(k, f, g), h);
    axpy(out, -k.field().one(), cup(k, f, cup(k, g, h)));
    return out;
}

KoszulCochain associator_homotopy(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g,
                                  const KoszulCochain& h) {
    if (f.degree % 2 == 0 || g.degree % 2 == 0 || h.degree % 2 == 0)
        throw NonComposable("the associator homotopy is defined for three odd degrees");
    const GradedAlgebra& a = k.algebra();
    const std::size_t N = a.N();
    const std::size_t P = N * (f.degree / 2), Q = N * (g.degree / 2), R = N * (h.degree / 2);
    const std::size_t m = P + Q + R + N;
    const Coefficients c = combine(combine(f.coefficients, g.coefficients), h.coefficients);
    KoszulCochain u = k.zero_cochain(c, f.degree + g.degree + h.degree - 1, f.weight + g.weight + h.weight);
    if (u.values.rows() == 0 || f.values.rows() == 0 || g.values.rows() == 0 || h.values.rows() == 0) return u;
    CochainEval fv(k, f), gv(k, g), hv(k, h);
    const WSpace& ws = a.W(m);
    for (std::size_t col = 0; col < ws.dim(); ++col) {
        Vector acc = zero_vector(k.field(), u.values.rows());
        for (const auto& [word, cw] : ws.rows[col]) {
            WordView x(a, word, m);
            // Σ_{k=1}^{N-2} Σ_{i=0}^{N-2-k} Σ_{l=0}^{k-1}
            //   x_1..x_l f(x_{l+1}..x_{l+P+1}) x_{l+P+2}..x_{P+i+1+l} g(x_{P+i+2+l}..x_{P+Q+i+2+l})
            //   x_{P+Q+i+3+l}..x_{P+Q+N-k+l} h(x_{P+Q+N-k+1+l}..x_{m-k+1+l}) x_{m-k+2+l}..x_m
            for (std::size_t kk = 1; kk + 2 <= N; ++kk)
                for (std::size_t i = 0; i + kk + 2 <= N; ++i)
                    for (std::size_t l = 0; l < kk; ++l) {
                        const Vector* fu = fv.value(x, l + 1, l + P + 1);
                        if (!fu) continue;
                        const Vector* gu = gv.value(x, P + i + 2 + l, P + Q + i + 2 + l);
                        if (!gu) continue;
                        const Vector* hu = hv.value(x, P + Q + N - kk + 1 + l, m - kk + 1 + l);
                        if (!hu) continue;
                        Factor t[7] = {x.sub(1, l),
                                       fv.factor(fu),
                                       x.sub(l + P + 2, P + i + 1 + l),
                                       gv.factor(gu),
                                       x.sub(P + Q + i + 3 + l, P + Q + N - kk + l),
                                       hv.factor(hu),
                                       x.sub(m - kk + 2 + l, m)};
                        k.module_accumulate(c, t, cw, acc);
                    }
        }
        u.values.set_column(col, acc);
    }
    return u;
}

KoszulChain associator_cap(const KoszulComplex& k, CapAssociator kind, const KoszulCochain& a,
                           const KoszulCochain& b, const KoszulChain& z) {
    const Scalar one = k.field().one();
    switch (kind) {
        case CapAssociator::LeftLeft: {
            // as(g,f,z) with g = a, f = b
            KoszulChain out = cap_left(k, a, cap_left(k, b, z));
            axpy(out, -one, cap_left(k, cup(k, a, b), z));
            return out;
        }
        case CapAssociator::RightRight: {
            // as(z,f,g) with f = a, g = b
            KoszulChain out = cap_right(k, cap_right(k, z, a), b);
            axpy(out, -one, cap_right(k, z, cup(k, a, b)));
            return out;
        }
        case CapAssociator::Middle: {
            // as(g,z,f) with g = a, f = b
            KoszulChain out = cap_left(k, a, cap_right(k, z, b));
            axpy(out, -one, cap_right(k, cap_left(k, a, z), b));
            return out;
        }
    }
    throw NonComposable("unknown cap associator");
}

KoszulChain cap_associator_homotopy(const KoszulComplex& k, const KoszulCochain& g, const KoszulCochain& f,
                                    const KoszulChain& zp) {
    const std::size_t p = f.degree, q = g.degree, r = zp.degree + 1;
    if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0)
        throw NonComposable("the cap associator homotopy is defined for three odd degrees");
    if (r < p + q + 1) throw NonComposable("the cap associator homotopy needs deg z > deg f + deg g");
    const GradedAlgebra& a = k.algebra();
    const std::size_t N = a.N();
    const std::size_t P = N * (p / 2), Q = N * (q / 2), Rr = N * (r / 2);
    const Coefficients c = combine(combine(f.coefficients, g.coefficients), zp.coefficients);
    const long ow = static_cast<long>(zp.weight) + f.weight + g.weight;
    if (ow < 0) throw NonComposable("cap associator homotopy lands in negative weight");
    ChainAccumulator out(k, c, r - p - q, static_cast<std::size_t>(ow));
    const std::size_t n = k.nu(zp.degree);  // = Rr
    if (zp.weight < n || f.values.rows() == 0 || g.values.rows() == 0) return out.finish();
    CochainEval fv(k, f), gv(k, g);
    const std::size_t mw = zp.weight - n;
    const WSpace& ws = a.W(n);
    const std::size_t dw = ws.dim();
    const std::size_t D = Rr - P - Q;
    for (std::size_t idx = 0; idx < zp.coords.size(); ++idx) {
        const Scalar& zc = zp.coords[idx];
        if (zc.is_zero()) continue;
        Factor m = Factor::letters(k.module_word(zp.coefficients, mw, idx / dw), mw);
        for (const auto& [word, cw] : ws.rows[idx % dw]) {
            WordView x(a, word, n);
            Scalar coef = zc * cw;
            // Σ_{i+j+k<=N-3} x_{D-N+i+2}..x_{D-j-k-2} g(x_{D-j-k-1}..x_{Rr-P-j-k-1}) x_{Rr-P-j-k}..x_{Rr-P-k-1}
            //     f(x_{Rr-P-k}..x_{Rr-k}) x_{Rr-k+1}..x_{Rr} m x_1..x_i ⊗ x_{i+1}..x_{D-N+i+1}
            for (std::size_t i = 0; i + 3 <= N; ++i)
                for (std::size_t j = 0; i + j + 3 <= N; ++j)
                    for (std::size_t kk = 0; i + j + kk + 3 <= N; ++kk) {
                        const Vector* gu = gv.value(x, D - j - kk - 1, Rr - P - j - kk - 1);
                        if (!gu) continue;
                        const Vector* fu = fv.value(x, Rr - P - kk, Rr - kk);
                        if (!fu) continue;
                        Factor t[7] = {x.sub(D - N + i + 2, D - j - kk - 2),
                                       gv.factor(gu),
                                       x.sub(Rr - P - j - kk, Rr - P - kk - 1),
                                       fv.factor(fu),
                                       x.sub(Rr - kk + 1, Rr),
                                       m,
                                       x.sub(1, i)};
                        out.add(t, coef, x.index(i + 1, D - N + i + 1));
                    }
        }
    }
    return out.finish();
}

CubicWitness cubic_witness(const KoszulComplex& k, const Scalar& a, const Scalar& b) {
    const GradedAlgebra& alg = k.algebra();
    const Presentation& pres = alg.presentation();
    if (alg.g() != 2 || alg.N() != 3 || pres.relations.size() != 2)
        throw NonComposable("the cubic witness needs two cubic relations in x, y");
    const Field F = k.field();
    const Letter x = 0, y = 1;
    auto word = [&](std::initializer_list<Letter> l) { return TensorElement::word(F, 2, std::vector<Letter>(l)); };
    TensorElement w = concat(word({x}), pres.relations[0]) + concat(word({y}), pres.relations[1]);
    KoszulCochain as = associator_cup(k, euler_cochain(k), euler_cochain(k), constant_one_cochain(k));
    CubicWitness out;
    out.value = {3, evaluate(k, as, w)};
    TensorElement t = word({x, y, x}) - word({x, y, y}) - word({y, x, x}) + word({y, x, y});
    out.outside_relations = !alg.relation_space().contains(t.coefficients());
    t *= a - b;
    out.expected = alg.reduce(t);
    out.matches = out.value.coords == out.expected.coords;
    out.nonzero = !koszul::is_zero(out.value.coords);
    return out;
}

}  // namespace koszul

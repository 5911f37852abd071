#include "koszul/calculus.hpp"
#include "koszul/error.hpp"

namespace koszul {

void axpy(KoszulChain& acc, const Scalar& c, const KoszulChain& z) {
    if (!same_shape(acc, z)) throw NonComposable("adding chains of different shapes");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < acc.coords.size(); ++i)
        if (!z.coords[i].is_zero()) acc.coords[i].add_mul(c, z.coords[i]);
}

void axpy(KoszulCochain& acc, const Scalar& c, const KoszulCochain& f) {
    if (!same_shape(acc, f)) throw NonComposable("adding cochains of different shapes");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < acc.values.rows(); ++i)
        for (std::size_t j = 0; j < acc.values.cols(); ++j)
            if (!f.values(i, j).is_zero()) acc.values(i, j).add_mul(c, f.values(i, j));
}

KoszulChain scaled(const KoszulChain& z, const Scalar& c) {
    KoszulChain out = z;
    for (auto& x : out.coords) x *= c;
    return out;
}

KoszulCochain scaled(const KoszulCochain& f, const Scalar& c) {
    KoszulCochain out = f;
    out.values = koszul::scaled(f.values, c);
    return out;
}

bool is_zero(const KoszulChain& z) { return koszul::is_zero(z.coords); }
bool is_zero(const KoszulCochain& f) { return f.values.is_zero(); }

bool same_shape(const KoszulChain& a, const KoszulChain& b) {
    return a.coefficients == b.coefficients && a.degree == b.degree && a.weight == b.weight &&
           a.coords.size() == b.coords.size();
}

bool same_shape(const KoszulCochain& a, const KoszulCochain& b) {
    return a.coefficients == b.coefficients && a.degree == b.degree && a.weight == b.weight &&
           a.values.rows() == b.values.rows() && a.values.cols() == b.values.cols();
}

Scalar sign(Field f, std::size_t e) { return e % 2 ? -f.one() : f.one(); }

Vector evaluate(const KoszulComplex& k, const KoszulCochain& f, const TensorElement& w) {
    const WSpace& ws = k.algebra().W(k.nu(f.degree));
    if (w.weight() != ws.length) throw NonComposable("element has the wrong tensor length");
    Vector c = ws.space.coordinates(w.coefficients());
    Vector out = zero_vector(k.field(), f.values.rows());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!f.values(i, j).is_zero()) out[i].add_mul(c[j], f.values(i, j));
    return out;
}

KoszulCochain euler_cochain(const KoszulComplex& k) {
    const GradedAlgebra& a = k.algebra();
    KoszulCochain e = k.zero_cochain(Coefficients::Algebra, 1, 0);
    // W_1 = V with the letter basis, and A_1 = V.
    for (std::size_t x = 0; x < a.g(); ++x)
        for (const auto& [b, v] : a.normal_form(1, x)) e.values(b, x) += v;
    return e;
}

KoszulCochain constant_one_cochain(const KoszulComplex& k) {
    KoszulCochain h = k.zero_cochain(Coefficients::Algebra, 1, -1);
    for (std::size_t x = 0; x < h.values.cols(); ++x) h.values(0, x) = k.field().one();
    return h;
}

KoszulCochain cup(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g) {
    const GradedAlgebra& a = k.algebra();
    const std::size_t p = f.degree, q = g.degree, N = a.N();
    const Coefficients c = combine(f.coefficients, g.coefficients);
    KoszulCochain out = k.zero_cochain(c, p + q, f.weight + g.weight);
    if (out.values.rows() == 0 || f.values.rows() == 0 || g.values.rows() == 0) return out;
    CochainEval fv(k, f), gv(k, g);
    const std::size_t np = k.nu(p), nq = k.nu(q), L = k.nu(p + q);
    const bool both_odd = p % 2 == 1 && q % 2 == 1;
    const WSpace& ws = a.W(L);
    for (std::size_t col = 0; col < ws.dim(); ++col) {
        Vector acc = zero_vector(k.field(), out.values.rows());
        for (const auto& [word, cw] : ws.rows[col]) {
            WordView x(a, word, L);
            if (!both_odd) {
                // f(x_1..x_{ν(p)}) g(x_{ν(p)+1}..x_{ν(p)+ν(q)})
                const Vector* u = fv.value(x, 1, np);
                const Vector* v = u ? gv.value(x, np + 1, np + nq) : nullptr;
                if (!v) continue;
                Factor t[2] = {fv.factor(u), gv.factor(v)};
                k.module_accumulate(c, t, cw, acc);
                continue;
            }
            // -Σ_{i+j<=N-2} x_1..x_i f(x_{i+1}..x_{i+ν(p)}) x_{i+ν(p)+1}..x_{ν(p)+N-j-2}
            //     g(x_{ν(p)+N-j-1}..x_{ν(p)+ν(q)+N-j-2}) x_{ν(p)+ν(q)+N-j-1}..x_L
            for (std::size_t i = 0; i + 2 <= N; ++i)
                for (std::size_t j = 0; i + j + 2 <= N; ++j) {
                    const Vector* u = fv.value(x, i + 1, i + np);
                    if (!u) continue;
                    const Vector* v = gv.value(x, np + N - j - 1, np + nq + N - j - 2);
                    if (!v) continue;
                    Factor t[5] = {x.sub(1, i), fv.factor(u), x.sub(i + np + 1, np + N - j - 2), gv.factor(v),
                                   x.sub(np + nq + N - j - 1, L)};
                    k.module_accumulate(c, t, -cw, acc);
                }
        }
        out.values.set_column(col, acc);
    }
    return out;
}

namespace {

struct CapSetup {
    std::size_t p, q, mw, out_weight;
    Coefficients c;
};

CapSetup cap_setup(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z) {
    if (z.degree < f.degree) throw NonComposable("cap with a cochain of larger degree is zero; no target degree");
    const long ow = static_cast<long>(z.weight) + f.weight;
    if (ow < 0) throw NonComposable("cap product lands in negative weight");
    const std::size_t nq = k.nu(z.degree);
    return {f.degree, z.degree, z.weight >= nq ? z.weight - nq : 0, static_cast<std::size_t>(ow),
            combine(f.coefficients, z.coefficients)};
}

}  // namespace

KoszulChain cap_left(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z) {
    const GradedAlgebra& a = k.algebra();
    const CapSetup s = cap_setup(k, f, z);
    const std::size_t N = a.N(), nq = k.nu(s.q), nd = k.nu(s.q - s.p);
    ChainAccumulator out(k, s.c, s.q - s.p, s.out_weight);
    if (f.values.rows() == 0 || z.weight < nq) return out.finish();
    CochainEval fv(k, f);
    const WSpace& ws = a.W(nq);
    const std::size_t dw = ws.dim();
    const bool second = s.p % 2 == 1 && s.q % 2 == 0;
    const std::size_t pp = s.p / 2, qq = s.q / 2;
    for (std::size_t idx = 0; idx < z.coords.size(); ++idx) {
        const Scalar& zc = z.coords[idx];
        if (zc.is_zero()) continue;
        Factor m = Factor::letters(k.module_word(z.coefficients, s.mw, idx / dw), s.mw);
        for (const auto& [word, cw] : ws.rows[idx % dw]) {
            WordView x(a, word, nq);
            Scalar coef = zc * cw;
            if (!second) {
                // f(x_{ν(q-p)+1}..x_{ν(q)}) m ⊗ x_1..x_{ν(q-p)}
                const Vector* v = fv.value(x, nd + 1, nq);
                if (!v) continue;
                Factor t[2] = {fv.factor(v), m};
                out.add(t, coef, x.index(1, nd));
                continue;
            }
            // -Σ_{i+j<=N-2} x_{Nq'-Np'-N+i+2}..x_{Nq'-Np'-j-1} f(x_{Nq'-Np'-j}..x_{Nq'-j})
            //     x_{Nq'-j+1}..x_{Nq'} m x_1..x_i ⊗ x_{i+1}..x_{i+Nq'-Np'-N+1}
            const std::size_t D = N * qq - N * pp;
            for (std::size_t i = 0; i + 2 <= N; ++i)
                for (std::size_t j = 0; i + j + 2 <= N; ++j) {
                    const Vector* v = fv.value(x, D - j, N * qq - j);
                    if (!v) continue;
                    Factor t[5] = {x.sub(D - N + i + 2, D - j - 1), fv.factor(v), x.sub(N * qq - j + 1, N * qq), m,
                                   x.sub(1, i)};
                    out.add(t, -coef, x.index(i + 1, i + D - N + 1));
                }
        }
    }
    return out.finish();
}

KoszulChain cap_right(const KoszulComplex& k, const KoszulChain& z, const KoszulCochain& f) {
    const GradedAlgebra& a = k.algebra();
    const CapSetup s = cap_setup(k, f, z);
    const std::size_t N = a.N(), nq = k.nu(s.q), np = k.nu(s.p);
    ChainAccumulator out(k, s.c, s.q - s.p, s.out_weight);
    if (f.values.rows() == 0 || z.weight < nq) return out.finish();
    CochainEval fv(k, f);
    const WSpace& ws = a.W(nq);
    const std::size_t dw = ws.dim();
    const bool second = s.p % 2 == 1 && s.q % 2 == 0;
    const std::size_t pp = s.p / 2, qq = s.q / 2;
    const Scalar sg = sign(k.field(), s.p * s.q);
    for (std::size_t idx = 0; idx < z.coords.size(); ++idx) {
        const Scalar& zc = z.coords[idx];
        if (zc.is_zero()) continue;
        Factor m = Factor::letters(k.module_word(z.coefficients, s.mw, idx / dw), s.mw);
        for (const auto& [word, cw] : ws.rows[idx % dw]) {
            WordView x(a, word, nq);
            Scalar coef = zc * cw;
            if (!second) {
                // (-1)^{pq} m f(x_1..x_{ν(p)}) ⊗ x_{ν(p)+1}..x_{ν(q)}
                const Vector* v = fv.value(x, 1, np);
                if (!v) continue;
                Factor t[2] = {m, fv.factor(v)};
                out.add(t, sg * coef, x.index(np + 1, nq));
                continue;
            }
            // Σ_{i+j<=N-2} x_{Nq'-j+1}..x_{Nq'} m x_1..x_i f(x_{i+1}..x_{Np'+i+1})
            //     x_{Np'+i+2}..x_{Np'+N-j-1} ⊗ x_{Np'+N-j}..x_{Nq'-j}
            for (std::size_t i = 0; i + 2 <= N; ++i)
                for (std::size_t j = 0; i + j + 2 <= N; ++j) {
                    const Vector* v = fv.value(x, i + 1, N * pp + i + 1);
                    if (!v) continue;
                    Factor t[5] = {x.sub(N * qq - j + 1, N * qq), m, x.sub(1, i), fv.factor(v),
                                   x.sub(N * pp + i + 2, N * pp + N - j - 1)};
                    out.add(t, coef, x.index(N * pp + N - j, N * qq - j));
                }
        }
    }
    return out.finish();
}

KoszulCochain cup_bracket(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g) {
    KoszulCochain out = cup(k, f, g);
    axpy(out, -sign(k.field(), f.degree * g.degree), cup(k, g, f));
    return out;
}

KoszulChain cap_bracket(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z) {
    KoszulChain out = cap_left(k, f, z);
    axpy(out, -sign(k.field(), f.degree * z.degree), cap_right(k, z, f));
    return out;
}

KoszulCochain leibniz_cup_residual(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g) {
    KoszulCochain r = k.coboundary(cup(k, f, g));
    axpy(r, -k.field().one(), cup(k, k.coboundary(f), g));
    axpy(r, -sign(k.field(), f.degree), cup(k, f, k.coboundary(g)));
    return r;
}

KoszulChain leibniz_cap_left_residual(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z) {
    if (z.degree < f.degree + 1) throw NonComposable("left cap Leibniz rule needs deg z > deg f");
    KoszulChain r = k.boundary(cap_left(k, f, z));
    axpy(r, -k.field().one(), cap_left(k, k.coboundary(f), z));
    axpy(r, -sign(k.field(), f.degree), cap_left(k, f, k.boundary(z)));
    return r;
}

KoszulChain leibniz_cap_right_residual(const KoszulComplex& k, const KoszulChain& z, const KoszulCochain& f) {
    if (z.degree < f.degree + 1) throw NonComposable("right cap Leibniz rule needs deg z > deg f");
    KoszulChain r = k.boundary(cap_right(k, z, f));
    axpy(r, -k.field().one(), cap_right(k, k.boundary(z), f));
    axpy(r, -sign(k.field(), z.degree), cap_right(k, z, k.coboundary(f)));
    return r;
}

KoszulCochain fundamental_cochain_residual(const KoszulComplex& k, const KoszulCochain& f) {
    const Field F = k.field();
    const long N = static_cast<long>(k.algebra().N());
    KoszulCochain r = cup_bracket(k, euler_cochain(k), f);
    Scalar factor = f.degree % 2 == 0 ? -F.one() : F.from_int(1 - N);
    axpy(r, -factor, k.coboundary(f));
    return r;
}

KoszulChain fundamental_chain_residual(const KoszulComplex& k, const KoszulChain& z) {
    const Field F = k.field();
    const long N = static_cast<long>(k.algebra().N());
    KoszulChain r = cap_bracket(k, euler_cochain(k), z);
    Scalar factor = z.degree % 2 == 1 ? -F.one() : F.from_int(1 - N);
    axpy(r, -factor, k.boundary(z));
    return r;
}

}  // namespace koszul

#include "koszul/koszul_complex.hpp"

#include "koszul/error.hpp"

namespace koszul {

std::string to_string(Coefficients c) { return c == Coefficients::Algebra ? "A" : "k"; }
std::string to_string(Side s) { return s == Side::Homology ? "homology" : "cohomology"; }

std::size_t KoszulComplex::module_dim(Coefficients c, long m) const {
    if (m < 0) return 0;
    if (c == Coefficients::Field) return m == 0 ? 1 : 0;
    return a_.dim(static_cast<std::size_t>(m));
}

bool KoszulComplex::module_known(Coefficients c, long m) const {
    return m < 0 || c == Coefficients::Field || a_.known(static_cast<std::size_t>(m));
}

std::size_t KoszulComplex::module_word(Coefficients c, std::size_t m, std::size_t i) const {
    if (c == Coefficients::Field) return 0;
    return a_.basis_words(m)[i];
}

void KoszulComplex::module_accumulate(Coefficients c, std::span<const Factor> fs, const Scalar& coeff,
                                      Vector& out) const {
    if (c == Coefficients::Algebra) {
        a_.accumulate(fs, coeff, out);
        return;
    }
    // k = A / A_+: only weight-zero factors survive, and A_0 = k.
    Scalar v = coeff;
    for (const auto& f : fs) {
        if (f.length > 0) return;
        if (f.elem) v *= (*f.elem)[0];
    }
    if (out.size() != 1) throw NonComposable("k-valued accumulator must have one entry");
    out[0] += v;
}

std::size_t KoszulComplex::chain_dim(Coefficients c, std::size_t p, std::size_t w) const {
    const std::size_t n = nu(p);
    if (w < n) return 0;
    std::size_t dm = module_dim(c, static_cast<long>(w - n));
    return dm ? dm * w_dim(p) : 0;
}

std::size_t KoszulComplex::cochain_dim(Coefficients c, std::size_t p, long n) const {
    std::size_t dm = module_dim(c, static_cast<long>(nu(p)) + n);
    return dm ? dm * w_dim(p) : 0;
}

KoszulChain KoszulComplex::zero_chain(Coefficients c, std::size_t p, std::size_t w) const {
    return {c, p, w, zero_vector(field(), chain_dim(c, p, w))};
}

KoszulCochain KoszulComplex::zero_cochain(Coefficients c, std::size_t p, long n) const {
    std::size_t dm = module_dim(c, static_cast<long>(nu(p)) + n);
    return {c, p, n, Matrix(field(), dm, w_dim(p))};
}

KoszulChain KoszulComplex::chain(Coefficients c, std::size_t p, std::size_t w, Vector coords) const {
    if (coords.size() != chain_dim(c, p, w)) throw NonComposable("chain coordinate length mismatch");
    return {c, p, w, std::move(coords)};
}

KoszulCochain KoszulComplex::cochain(Coefficients c, std::size_t p, long n, const Vector& flat) const {
    KoszulCochain f = zero_cochain(c, p, n);
    if (flat.size() != f.values.rows() * f.values.cols()) throw NonComposable("cochain coordinate length mismatch");
    const std::size_t dw = f.values.cols();
    for (std::size_t i = 0; i < f.values.rows(); ++i)
        for (std::size_t k = 0; k < dw; ++k) f.values(i, k) = flat[i * dw + k];
    return f;
}

Vector KoszulComplex::flatten(const KoszulCochain& f) {
    Vector v;
    v.reserve(f.values.rows() * f.values.cols());
    for (std::size_t i = 0; i < f.values.rows(); ++i)
        for (const auto& s : f.values.row(i)) v.push_back(s);
    return v;
}

CochainEval::CochainEval(const KoszulComplex& k, const KoszulCochain& f) : ws_(&k.algebra().W(k.nu(f.degree))) {
    long vw = static_cast<long>(k.nu(f.degree)) + f.weight;
    vw_ = vw < 0 ? 0 : static_cast<std::size_t>(vw);
    if (f.values.rows() == 0) return;
    cols_.reserve(f.values.cols());
    for (std::size_t c = 0; c < f.values.cols(); ++c) cols_.push_back(f.values.column(c));
}

const Vector* CochainEval::value(const WordView& w, std::size_t from, std::size_t to) const {
    if (cols_.empty()) return nullptr;
    std::int32_t k = ws_->pivot_of[w.index(from, to)];
    return k < 0 ? nullptr : &cols_[static_cast<std::size_t>(k)];
}

ChainAccumulator::ChainAccumulator(const KoszulComplex& k, Coefficients c, std::size_t p, std::size_t w)
    : k_(k), c_(c), p_(p), w_(w), ws_(&k.algebra().W(k.nu(p))) {
    const std::size_t n = k.nu(p);
    std::size_t dm = w >= n ? k.module_dim(c, static_cast<long>(w - n)) : 0;
    acc_.assign(dm ? ws_->dim() : 0, zero_vector(k.field(), dm));
}

void ChainAccumulator::add(std::span<const Factor> fs, const Scalar& coeff, std::size_t word) {
    if (acc_.empty()) return;
    std::int32_t j = ws_->pivot_of[word];
    if (j < 0) return;
    k_.module_accumulate(c_, fs, coeff, acc_[static_cast<std::size_t>(j)]);
}

KoszulChain ChainAccumulator::finish() const {
    KoszulChain z = k_.zero_chain(c_, p_, w_);
    const std::size_t dw = ws_->dim();
    for (std::size_t j = 0; j < acc_.size(); ++j)
        for (std::size_t i = 0; i < acc_[j].size(); ++i) z.coords[i * dw + j] = acc_[j][i];
    return z;
}

KoszulChain KoszulComplex::boundary(const KoszulChain& z) const {
    if (z.degree == 0) throw NonComposable("boundary of a degree-0 chain");
    const std::size_t q = z.degree, n = nu(q), N = a_.N();
    const Coefficients c = z.coefficients;
    ChainAccumulator out(*this, c, q - 1, z.weight);
    if (z.weight < n) return out.finish();
    const std::size_t mw = z.weight - n;
    const WSpace& ws = a_.W(n);
    const std::size_t dw = ws.dim();
    const std::size_t qq = q / 2;
    for (std::size_t idx = 0; idx < z.coords.size(); ++idx) {
        const Scalar& zc = z.coords[idx];
        if (zc.is_zero()) continue;
        const std::size_t i = idx / dw, k = idx % dw;
        Factor m = Factor::letters(module_word(c, mw, i), mw);
        for (const auto& [word, cw] : ws.rows[k]) {
            WordView x(a_, word, n);
            Scalar coef = zc * cw;
            if (q % 2 == 1) {
                // m x_1 ⊗ x_2..x_n - x_n m ⊗ x_1..x_{n-1}
                Factor t1[2] = {m, x.sub(1, 1)};
                out.add(t1, coef, x.index(2, n));
                Factor t2[2] = {x.sub(n, n), m};
                out.add(t2, -coef, x.index(1, n - 1));
            } else {
                // Σ_i x_{i+Nq'-N+2}..x_{Nq'} m x_1..x_i ⊗ x_{i+1}..x_{i+Nq'-N+1}
                for (std::size_t s = 0; s < N; ++s) {
                    Factor t[3] = {x.sub(s + N * qq - N + 2, N * qq), m, x.sub(1, s)};
                    out.add(t, coef, x.index(s + 1, s + N * qq - N + 1));
                }
            }
        }
    }
    return out.finish();
}

KoszulCochain KoszulComplex::coboundary(const KoszulCochain& f) const {
    const std::size_t p = f.degree, N = a_.N(), pp = p / 2;
    const Coefficients c = f.coefficients;
    KoszulCochain out = zero_cochain(c, p + 1, f.weight);
    if (out.values.rows() == 0 || f.values.rows() == 0) return out;
    CochainEval fv(*this, f);
    const std::size_t n1 = nu(p + 1);
    const WSpace& ws = a_.W(n1);
    for (std::size_t k = 0; k < ws.dim(); ++k) {
        Vector acc = zero_vector(field(), out.values.rows());
        for (const auto& [word, cw] : ws.rows[k]) {
            WordView x(a_, word, n1);
            if (p % 2 == 0) {
                // f(x_1..x_{Np'}) x_{Np'+1} - x_1 f(x_2..x_{Np'+1})
                if (const Vector* v = fv.value(x, 1, N * pp)) {
                    Factor t[2] = {fv.factor(v), x.sub(n1, n1)};
                    module_accumulate(c, t, cw, acc);
                }
                if (const Vector* v = fv.value(x, 2, n1)) {
                    Factor t[2] = {x.sub(1, 1), fv.factor(v)};
                    module_accumulate(c, t, -cw, acc);
                }
            } else {
                // Σ_i x_1..x_i f(x_{i+1}..x_{i+Np'+1}) x_{i+Np'+2}..x_{Np'+N}
                for (std::size_t s = 0; s < N; ++s) {
                    const Vector* v = fv.value(x, s + 1, s + N * pp + 1);
                    if (!v) continue;
                    Factor t[3] = {x.sub(1, s), fv.factor(v), x.sub(s + N * pp + 2, n1)};
                    module_accumulate(c, t, cw, acc);
                }
            }
        }
        out.values.set_column(k, acc);
    }
    return out;
}

Matrix KoszulComplex::chain_differential(Coefficients c, std::size_t p, std::size_t w) const {
    const std::size_t dom = chain_dim(c, p, w);
    if (p == 0) return Matrix(field(), 0, dom);
    Matrix d(field(), chain_dim(c, p - 1, w), dom);
    KoszulChain z = zero_chain(c, p, w);
    for (std::size_t j = 0; j < dom; ++j) {
        z.coords[j] = field().one();
        d.set_column(j, boundary(z).coords);
        z.coords[j] = field().zero();
    }
    return d;
}

Matrix KoszulComplex::cochain_differential(Coefficients c, std::size_t p, long n) const {
    const std::size_t dom = cochain_dim(c, p, n);
    Matrix d(field(), cochain_dim(c, p + 1, n), dom);
    if (dom == 0 || d.rows() == 0) return d;
    Vector e = zero_vector(field(), dom);
    for (std::size_t j = 0; j < dom; ++j) {
        e[j] = field().one();
        d.set_column(j, flatten(coboundary(cochain(c, p, n, e))));
        e[j] = field().zero();
    }
    return d;
}

const HomologyBasis& KoszulComplex::homology(Coefficients c, std::size_t p, std::size_t w) const {
    auto key = std::make_tuple(0, static_cast<int>(c), p, static_cast<long>(w));
    {
        std::lock_guard lock(mutex_);
        if (auto it = cells_.find(key); it != cells_.end()) return *it->second;
    }
    Matrix d_out = chain_differential(c, p, w);
    Matrix d_in = chain_differential(c, p + 1, w);
    auto cell = std::make_unique<HomologyBasis>(koszul::homology(d_out, d_in));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cells_.emplace(key, std::move(cell));
    return *it->second;
}

const HomologyBasis& KoszulComplex::cohomology(Coefficients c, std::size_t p, long n) const {
    auto key = std::make_tuple(1, static_cast<int>(c), p, n);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cells_.find(key); it != cells_.end()) return *it->second;
    }
    Matrix d_out = cochain_differential(c, p, n);
    Matrix d_in = p == 0 ? Matrix(field(), cochain_dim(c, 0, n), 0) : cochain_differential(c, p - 1, n);
    auto cell = std::make_unique<HomologyBasis>(koszul::homology(d_out, d_in));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cells_.emplace(key, std::move(cell));
    return *it->second;
}

std::vector<BimoduleTerm> KoszulComplex::bimodule_generator_d(std::size_t p, std::size_t k) const {
    if (p == 0) throw NonComposable("d has no component out of K_0");
    const std::size_t n = nu(p), N = a_.N(), pp = p / 2;
    const WSpace& ws = a_.W(n);
    const WSpace& target = a_.W(nu(p - 1));
    std::vector<BimoduleTerm> terms;
    auto push = [&](const WordView& x, std::size_t l0, std::size_t l1, std::size_t m0, std::size_t m1, std::size_t r0,
                    std::size_t r1, const Scalar& c) {
        std::int32_t j = target.pivot_of[x.index(m0, m1)];
        if (j < 0) return;
        Factor l = x.sub(l0, l1), r = x.sub(r0, r1);
        terms.push_back({l.word, l.length, static_cast<std::size_t>(j), r.word, r.length, c});
    };
    for (const auto& [word, cw] : ws.rows.at(k)) {
        WordView x(a_, word, n);
        if (p % 2 == 1) {
            // x_1 ⊗ x_2..x_n ⊗ 1 - 1 ⊗ x_1..x_{n-1} ⊗ x_n
            push(x, 1, 1, 2, n, 1, 0, cw);
            push(x, 1, 0, 1, n - 1, n, n, -cw);
        } else {
            // Σ_i x_1..x_i ⊗ x_{i+1}..x_{i+Np'-N+1} ⊗ x_{i+Np'-N+2}..x_{Np'}
            for (std::size_t s = 0; s < N; ++s) push(x, 1, s, s + 1, s + N * pp - N + 1, s + N * pp - N + 2, n, cw);
        }
    }
    return terms;
}

std::size_t KoszulComplex::bimodule_dim(std::size_t p, std::size_t w) const {
    const std::size_t n = nu(p);
    if (w < n) return 0;
    const std::size_t dw = w_dim(p);
    std::size_t total = 0;
    for (std::size_t a = 0; a <= w - n; ++a) total += a_.dim(a) * dw * a_.dim(w - n - a);
    return total;
}

std::size_t KoszulComplex::bimodule_index(std::size_t p, std::size_t w, std::size_t a, std::size_t i, std::size_t k,
                                          std::size_t j) const {
    const std::size_t n = nu(p), dw = w_dim(p);
    std::size_t offset = 0;
    for (std::size_t b = 0; b < a; ++b) offset += a_.dim(b) * dw * a_.dim(w - n - b);
    return offset + (i * dw + k) * a_.dim(w - n - a) + j;
}

SparseMatrix KoszulComplex::bimodule_d(std::size_t p, std::size_t w) const {
    const std::size_t dom = bimodule_dim(p, w);
    if (p == 0) return SparseMatrix(field(), 0, dom);
    SparseMatrix d(field(), bimodule_dim(p - 1, w), dom);
    const std::size_t n = nu(p);
    if (w < n) return d;
    const std::size_t dw = w_dim(p), n1 = nu(p - 1);
    std::vector<std::vector<BimoduleTerm>> gens(dw);
    for (std::size_t k = 0; k < dw; ++k) gens[k] = bimodule_generator_d(p, k);
    std::size_t col = 0;
    for (std::size_t a = 0; a <= w - n; ++a) {
        const std::size_t b = w - n - a;
        const auto& lw = a_.basis_words(a);
        const auto& rw = a_.basis_words(b);
        for (std::size_t i = 0; i < lw.size(); ++i)
            for (std::size_t k = 0; k < dw; ++k)
                for (std::size_t j = 0; j < rw.size(); ++j, ++col) {
                    SparseVector entries;
                    for (const auto& t : gens[k]) {
                        const std::size_t la = a + t.left_len, rb = t.right_len + b;
                        if (la + n1 + rb != w) throw NotAComplex("bimodule differential does not preserve weight");
                        const auto& lnf = a_.normal_form(la, lw[i] * a_.pow_g(t.left_len) + t.left_word);
                        if (lnf.empty()) continue;
                        const auto& rnf = a_.normal_form(rb, t.right_word * a_.pow_g(b) + rw[j]);
                        for (const auto& [li, lv] : lnf)
                            for (const auto& [ri, rv] : rnf)
                                entries.emplace_back(
                                    static_cast<std::uint32_t>(bimodule_index(p - 1, w, la, li, t.w_index, ri)),
                                    t.coeff * lv * rv);
                    }
                    d.set_column(col, std::move(entries));
                }
    }
    return d;
}

}  // namespace koszul

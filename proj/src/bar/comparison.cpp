#include "koszul/bar.hpp"

#include "koszul/error.hpp"

namespace koszul {

namespace {

SparseVector word_ids(const BarComplex& b, std::size_t word, std::size_t len) {
    const GradedAlgebra& a = b.algebra();
    SparseVector out;
    if (len > b.weight_bound()) {
        if (!a.is_finite()) throw BoundsError("comparison needs a larger weight bound");
        return out;
    }
    for (const auto& [i, c] : a.normal_form(len, word)) out.emplace_back(b.id(len, i), c);
    return out;
}

}  // namespace

Comparison::Comparison(const KoszulComplex& k, const BarComplex& b, std::size_t p_max) : k_(k), b_(b) {
    if (&k.algebra() != &b.algebra()) throw NonComposable("complexes over different algebras");
    chi_.resize(p_max + 1);
    chi_[0].push_back(BarElement{{BarWord{b.unit(), b.unit()}, b.field().one()}});
    for (std::size_t p = 1; p <= p_max; ++p) {
        const std::size_t dw = k.w_dim(p);
        for (std::size_t j = 0; j < dw; ++j) chi_[p].push_back(b.extra_degeneracy(chi_of_boundary(p, j)));
    }
}

BarElement Comparison::chi_of_boundary(std::size_t p, std::size_t j) const {
    BarElement out;
    for (const BimoduleTerm& t : k_.bimodule_generator_d(p, j)) {
        SparseVector l = word_ids(b_, t.left_word, t.left_len), r = word_ids(b_, t.right_word, t.right_len);
        axpy(out, t.coeff, b_.act(l, chi_.at(p - 1).at(t.w_index), r));
    }
    return out;
}

bool Comparison::square_commutes(std::size_t p) const {
    if (p == 0 || p > p_max()) throw BoundsError("no comparison square in this degree");
    for (std::size_t j = 0; j < chi_[p].size(); ++j)
        if (b_.bar_differential(chi_[p][j]) != chi_of_boundary(p, j)) return false;
    return true;
}

BarElement Comparison::chi_tilde(const KoszulChain& z) const {
    if (z.coefficients != Coefficients::Algebra) throw NonComposable("χ̃ is implemented for A coefficients");
    const std::size_t p = z.degree;
    if (p > p_max()) throw BoundsError("χ not built in this degree");
    BarElement out;
    const std::size_t n = k_.nu(p);
    if (z.weight < n) return out;
    const std::size_t mw = z.weight - n, dw = k_.w_dim(p);
    for (std::size_t idx = 0; idx < z.coords.size(); ++idx) {
        const Scalar& c = z.coords[idx];
        if (c.is_zero()) continue;
        const std::uint32_t m = b_.id(mw, idx / dw);
        // m ⊗ (a_0 ⊗ ω ⊗ a_{p+1}) ↦ a_{p+1} m a_0 ⊗ ω
        for (const auto& [w, tc] : chi_[p][idx % dw])
            for (const auto& [x, xc] : b_.product(w.back(), m))
                for (const auto& [y, yc] : b_.product(x, w.front())) {
                    BarWord v{y};
                    v.insert(v.end(), w.begin() + 1, w.end() - 1);
                    add_term(out, v, c * tc * xc * yc);
                }
    }
    return out;
}

Matrix Comparison::chi_tilde_matrix(std::size_t p, std::size_t w) const {
    const std::size_t dom = k_.chain_dim(Coefficients::Algebra, p, w);
    Matrix m(b_.field(), b_.chain_basis(p, w).size(), dom);
    KoszulChain z = k_.zero_chain(Coefficients::Algebra, p, w);
    for (std::size_t j = 0; j < dom; ++j) {
        z.coords[j] = b_.field().one();
        m.set_column(j, b_.chain_vector(p, w, chi_tilde(z)));
        z.coords[j] = b_.field().zero();
    }
    return m;
}

KoszulCochain Comparison::chi_star(const HochschildCochain& f) const {
    const std::size_t p = f.degree;
    if (p > p_max()) throw BoundsError("χ not built in this degree");
    KoszulCochain out = k_.zero_cochain(Coefficients::Algebra, p, f.weight);
    if (out.values.rows() == 0) return out;
    const std::size_t ow = static_cast<std::size_t>(static_cast<long>(k_.nu(p)) + f.weight);
    for (std::size_t j = 0; j < chi_[p].size(); ++j) {
        Vector acc = zero_vector(b_.field(), out.values.rows());
        // Σ a_0 f(a_1..a_p) a_{p+1}
        for (const auto& [w, tc] : chi_[p][j]) {
            BarWord mid(w.begin() + 1, w.end() - 1);
            auto v = b_.value(f, mid);
            if (!v) throw BoundsError("χ* evaluates the cochain outside its window");
            std::size_t s = 0;
            for (auto x : mid) s += b_.weight_of(x);
            const std::size_t vw = static_cast<std::size_t>(static_cast<long>(s) + f.weight);
            for (std::size_t i = 0; i < v->size(); ++i) {
                if ((*v)[i].is_zero()) continue;
                for (const auto& [x, xc] : b_.product(w.front(), b_.id(vw, i)))
                    for (const auto& [y, yc] : b_.product(x, w.back())) {
                        if (b_.weight_of(y) != ow) throw NonComposable("weight mismatch in χ*");
                        acc[b_.local_index(y)].add_mul(tc * (*v)[i], xc * yc);
                    }
            }
        }
        out.values.set_column(j, acc);
    }
    return out;
}

Matrix Comparison::chi_star_matrix(std::size_t p, long n) const {
    HochschildCochain f = b_.zero_cochain(p, n);
    Matrix m(b_.field(), k_.cochain_dim(Coefficients::Algebra, p, n), f.coords.size());
    for (std::size_t j = 0; j < f.coords.size(); ++j) {
        f.coords[j] = b_.field().one();
        m.set_column(j, KoszulComplex::flatten(chi_star(f)));
        f.coords[j] = b_.field().zero();
    }
    return m;
}

bool Comparison::chain_square_commutes(std::size_t p, std::size_t w) const {
    if (p == 0) return true;
    return b_.chain_differential(p, w) * chi_tilde_matrix(p, w) ==
           chi_tilde_matrix(p - 1, w) * k_.chain_differential(Coefficients::Algebra, p, w);
}

bool Comparison::cochain_square_commutes(std::size_t p, long n) const {
    return chi_star_matrix(p + 1, n) * b_.cochain_differential(p, n) ==
           k_.cochain_differential(Coefficients::Algebra, p, n) * chi_star_matrix(p, n);
}

Matrix Comparison::homology_map(std::size_t p, std::size_t w) const {
    const HomologyBasis& hk = k_.homology(Coefficients::Algebra, p, w);
    const HomologyBasis& hh = b_.homology(p, w);
    Matrix m(b_.field(), hh.dim(), hk.dim());
    for (std::size_t i = 0; i < hk.dim(); ++i) {
        KoszulChain z = k_.chain(Coefficients::Algebra, p, w, hk.representative(i));
        m.set_column(i, hh.coordinates(b_.chain_vector(p, w, chi_tilde(z))));
    }
    return m;
}

Matrix Comparison::cohomology_map(std::size_t p, long n) const {
    const HomologyBasis& hh = b_.cohomology(p, n);
    const HomologyBasis& hk = k_.cohomology(Coefficients::Algebra, p, n);
    Matrix m(b_.field(), hk.dim(), hh.dim());
    for (std::size_t i = 0; i < hh.dim(); ++i) {
        HochschildCochain f{p, n, hh.representative(i)};
        m.set_column(i, hk.coordinates(KoszulComplex::flatten(chi_star(f))));
    }
    return m;
}

bool is_truncated_polynomial(const GradedAlgebra& a) { return a.g() == 1 && a.relation_space().dim() == 1; }

BarElement chi_closed_form_truncated(const BarComplex& b, std::size_t p) {
    const GradedAlgebra& a = b.algebra();
    if (!is_truncated_polynomial(a)) throw NonComposable("the closed form is for k[x]/(x^N)");
    const std::size_t N = a.N(), pp = p / 2;
    BarElement out;
    auto x = [&](std::size_t e) { return b.id(e, 0); };
    std::vector<std::size_t> idx(pp, 1);
    // a ⊗ [x] ⊗ x^{i_{p'}} ⊗ x ⊗ ... ⊗ x^{i_1} ⊗ x ⊗ x^{(N-1)p' - Σ i} a'
    while (true) {
        std::size_t sum = 0;
        for (auto i : idx) sum += i;
        const std::size_t rest = (N - 1) * pp - sum;
        if (rest <= N - 1) {
            BarWord w{b.unit()};
            if (p % 2) w.push_back(x(1));
            for (std::size_t t = pp; t-- > 0;) {
                w.push_back(x(idx[t]));
                w.push_back(x(1));
            }
            w.push_back(x(rest));
            add_term(out, w, b.field().one());
        }
        std::size_t t = 0;
        while (t < pp && idx[t] == N - 1) idx[t++] = 1;
        if (t == pp) break;
        ++idx[t];
    }
    return out;
}

ContractionReport contraction_check(const BarComplex& b, Rng& rng, std::size_t p_max, std::size_t trials) {
    const GradedAlgebra& a = b.algebra();
    const std::size_t bound = b.weight_bound();
    ContractionReport rep;
    auto pick = [&](std::size_t lo, std::size_t budget) -> std::optional<std::uint32_t> {
        std::vector<std::uint32_t> ids;
        for (std::size_t m = lo; m <= std::min(budget, bound); ++m)
            for (std::size_t i = 0; i < a.dim(m); ++i) ids.push_back(b.id(m, i));
        if (ids.empty()) return std::nullopt;
        return ids[rng.below(ids.size())];
    };
    for (std::size_t attempt = 0; rep.trials < trials && attempt < 50 * trials; ++attempt) {
        const std::size_t p = rng.below(p_max + 1);
        // keep the total weight within the bound so every product is computable
        std::size_t budget = bound;
        BarWord w;
        bool ok = true;
        for (std::size_t slot = 0; slot < p + 2 && ok; ++slot) {
            const bool middle = slot > 0 && slot < p + 1;
            // reserve weight 1 for each middle slot still to come
            const std::size_t later = slot == 0 ? p : (middle ? p - slot : 0);
            if (budget < later) {
                ok = false;
                break;
            }
            auto id = pick(middle ? 1 : 0, budget - later);
            if (!id) {
                ok = false;
                break;
            }
            w.push_back(*id);
            budget -= b.weight_of(*id);
        }
        if (!ok) continue;
        BarElement x{{w, b.field().one()}};
        BarElement lhs = b.bar_differential(b.extra_degeneracy(x));
        BarElement bx = b.bar_differential(x);
        axpy(lhs, b.field().one(), b.extra_degeneracy(bx));
        ++rep.trials;
        if (lhs != x) ++rep.failures;
        if (!is_zero(b.extra_degeneracy(b.extra_degeneracy(x)))) ++rep.s_squared_failures;
    }
    return rep;
}

std::vector<IsoCell> low_degree_iso_check(const Comparison& c, std::size_t w_hi, long n_lo, long n_hi) {
    const KoszulComplex& k = c.complex();
    std::vector<IsoCell> out;
    for (std::size_t p = 0; p <= 1; ++p) {
        for (std::size_t w = k.nu(p); w <= w_hi; ++w) {
            Matrix m = c.homology_map(p, w);
            IsoCell cell{"homology", p, static_cast<long>(w), m.cols(), m.rows(), false};
            cell.iso = m.rows() == m.cols() && rank(m) == m.rows();
            out.push_back(cell);
        }
        for (long n = std::max(n_lo, -static_cast<long>(k.nu(p))); n <= n_hi; ++n) {
            Matrix m = c.cohomology_map(p, n);
            IsoCell cell{"cohomology", p, n, m.rows(), m.cols(), false};
            cell.iso = m.rows() == m.cols() && rank(m) == m.rows();
            out.push_back(cell);
        }
    }
    return out;
}

NonMorphismWitness non_morphism_witness(const Comparison& c) {
    const KoszulComplex& k = c.complex();
    const BarComplex& b = c.bar();
    const GradedAlgebra& a = k.algebra();
    const std::size_t N = a.N();
    if (!is_truncated_polynomial(a) || N <= 2) throw NonComposable("the witness needs k[x]/(x^N) with N > 2");
    if (c.p_max() < 2) throw BoundsError("the witness needs χ up to degree 2");
    const Field F = b.field();
    NonMorphismWitness wit;
    // f(x^i) = δ_{i,2}, a 1-cochain of internal weight -2
    HochschildCochain f = b.zero_cochain(1, -2);
    b.set_value(f, {b.id(2, 0)}, {F.one()});
    wit.chi_star_f_zero = is_zero(c.chi_star(f));
    // the Euler derivation D_A(x^i) = i x^i
    HochschildCochain d = b.zero_cochain(1, 0);
    for (std::size_t i = 1; i <= *a.top_weight(); ++i) b.set_value(d, {b.id(i, 0)}, {F.from_int(static_cast<long>(i))});
    KoszulCochain cd = c.chi_star(b.cup(f, d));
    wit.chi_star_f_cup_d = cd.values.column(0);
    wit.expected_cup = {-F.one()};
    wit.cup_matches = wit.chi_star_f_cup_d == wit.expected_cup;
    // z = x ⊗ x^N, and χ̃(z) ⌢ f
    KoszulChain z = k.chain(Coefficients::Algebra, 2, N + 1, {F.one()});
    wit.chi_tilde_z_cap_f = b.cap_right(c.chi_tilde(z), f);
    wit.expected_cap = {{BarWord{b.id(N - 2, 0), b.id(1, 0)}, F.one()}};
    wit.cap_matches = wit.chi_tilde_z_cap_f == wit.expected_cap;
    return wit;
}

ClassMorphismReport class_morphism_check(const Comparison& c, const ClassCalculus& cc, std::size_t p_max) {
    const KoszulComplex& k = c.complex();
    const BarComplex& b = c.bar();
    if (p_max > c.p_max()) throw BoundsError("χ not built up to the requested degree");
    ClassMorphismReport rep;
    struct Cell {
        std::size_t p;
        long w;
    };
    std::vector<Cell> co, ho;
    for (std::size_t p = 0; p <= p_max; ++p) {
        WeightWindow wc = table_window(k, Coefficients::Algebra, Side::Cohomology, p);
        for (long n = wc.lo; n <= wc.hi; ++n) co.push_back({p, n});
        WeightWindow wh = table_window(k, Coefficients::Algebra, Side::Homology, p);
        for (long w = wh.lo; w <= wh.hi; ++w) ho.push_back({p, w});
    }
    std::map<std::pair<std::size_t, long>, Matrix> hmap, cmap;
    auto cm = [&](std::size_t p, long n) -> const Matrix& {
        auto key = std::make_pair(p, n);
        auto it = cmap.find(key);
        if (it == cmap.end()) it = cmap.emplace(key, c.cohomology_map(p, n)).first;
        return it->second;
    };
    auto hm = [&](std::size_t p, long w) -> const Matrix& {
        auto key = std::make_pair(p, w);
        auto it = hmap.find(key);
        if (it == hmap.end()) it = hmap.emplace(key, c.homology_map(p, static_cast<std::size_t>(w))).first;
        return it->second;
    };
    auto unit = [&](std::size_t d, std::size_t i) {
        Vector v = zero_vector(b.field(), d);
        v[i] = b.field().one();
        return v;
    };
    for (const Cell& x : co) {
        const Matrix& m = cm(x.p, x.w);
        ++rep.iso_cells;
        if (!(m.rows() == m.cols() && rank(m) == m.rows())) ++rep.iso_failures;
    }
    for (const Cell& x : ho) {
        const Matrix& m = hm(x.p, x.w);
        ++rep.iso_cells;
        if (!(m.rows() == m.cols() && rank(m) == m.rows())) ++rep.iso_failures;
    }
    // H(χ*)(α ⌣ β) = H(χ*)α ⌣ H(χ*)β
    for (const Cell& x : co)
        for (const Cell& y : co) {
            if (x.p + y.p > p_max) continue;
            const HomologyBasis& hx = b.cohomology(x.p, x.w);
            const HomologyBasis& hy = b.cohomology(y.p, y.w);
            if (hx.dim() == 0 || hy.dim() == 0) continue;
            const HomologyBasis& hxy = b.cohomology(x.p + y.p, x.w + y.w);
            const Matrix& target = cm(x.p + y.p, x.w + y.w);
            const Matrix& consts = cc.cup_constants(x.p, x.w, y.p, y.w);
            for (std::size_t i = 0; i < hx.dim(); ++i)
                for (std::size_t j = 0; j < hy.dim(); ++j) {
                    HochschildCochain f{x.p, x.w, hx.representative(i)}, g{y.p, y.w, hy.representative(j)};
                    Vector lhs = target.apply(hxy.coordinates(b.cup(f, g).coords));
                    Vector rhs = product_of_classes(consts, cm(x.p, x.w).column(i), cm(y.p, y.w).column(j));
                    ++rep.cup_checks;
                    if (lhs != rhs) ++rep.cup_failures;
                }
        }
    // H(χ̃)(H(χ*)α ⌢ γ) = α ⌢ H(χ̃)γ, on both sides
    for (const Cell& x : co)
        for (const Cell& z : ho) {
            if (z.p < x.p) continue;
            const long ow = z.w + x.w;
            if (ow < 0) continue;
            const HomologyBasis& hx = b.cohomology(x.p, x.w);
            const HomologyBasis& hz = k.homology(Coefficients::Algebra, z.p, static_cast<std::size_t>(z.w));
            if (hx.dim() == 0 || hz.dim() == 0) continue;
            const std::size_t r = z.p - x.p;
            const HomologyBasis& hout = b.homology(r, static_cast<std::size_t>(ow));
            const Matrix& to_hh = hm(r, ow);
            const Matrix& left = cc.cap_left_constants(x.p, x.w, z.p, static_cast<std::size_t>(z.w));
            const Matrix& right = cc.cap_right_constants(z.p, static_cast<std::size_t>(z.w), x.p, x.w);
            for (std::size_t i = 0; i < hx.dim(); ++i) {
                HochschildCochain f{x.p, x.w, hx.representative(i)};
                const Vector alpha = cm(x.p, x.w).column(i);
                for (std::size_t j = 0; j < hz.dim(); ++j) {
                    KoszulChain zk = k.chain(Coefficients::Algebra, z.p, static_cast<std::size_t>(z.w), hz.representative(j));
                    BarElement zh = c.chi_tilde(zk);
                    const Vector gamma = unit(hz.dim(), j);
                    Vector lhs = to_hh.apply(product_of_classes(left, alpha, gamma));
                    Vector rhs = hout.coordinates(b.chain_vector(r, static_cast<std::size_t>(ow), b.cap_left(f, zh)));
                    ++rep.cap_checks;
                    if (lhs != rhs) ++rep.cap_failures;
                    lhs = to_hh.apply(product_of_classes(right, gamma, alpha));
                    rhs = hout.coordinates(b.chain_vector(r, static_cast<std::size_t>(ow), b.cap_right(zh, f)));
                    ++rep.cap_checks;
                    if (lhs != rhs) ++rep.cap_failures;
                }
            }
        }
    return rep;
}

}  // namespace koszul

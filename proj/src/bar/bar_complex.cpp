#include "koszul/bar.hpp"

#include "koszul/error.hpp"

namespace koszul {

void add_term(BarElement& e, const BarWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
}

void axpy(BarElement& acc, const Scalar& c, const BarElement& x) {
    if (c.is_zero()) return;
    for (const auto& [w, v] : x) add_term(acc, w, c * v);
}

bool is_zero(const BarElement& e) { return e.empty(); }

namespace {

template <class Map, class Key, class Build>
auto& cache_get(std::mutex& m, Map& map, const Key& key, Build build) {
    {
        std::lock_guard lock(m);
        if (auto it = map.find(key); it != map.end()) return *it->second;
    }
    auto value = build();
    std::lock_guard lock(m);
    auto [it, inserted] = map.emplace(key, std::move(value));
    return *it->second;
}

}  // namespace

BarComplex::BarComplex(const GradedAlgebra& a, std::size_t input_window)
    : a_(a), window_(input_window ? input_window : a.N()), bound_(a.is_finite() ? *a.top_weight() : a.w_max()) {
    for (std::size_t m = 0; m <= bound_; ++m) {
        offset_.push_back(weight_of_.size());
        for (std::size_t i = 0; i < a_.dim(m); ++i) weight_of_.push_back(m);
    }
    offset_.push_back(weight_of_.size());
}

std::size_t BarComplex::input_bound(std::size_t p) const {
    if (p == 0) return 0;
    return a_.is_finite() ? p * bound_ : window_;
}

void BarComplex::require_slot(std::size_t w) const {
    if (w > bound_ && !a_.is_finite()) throw BoundsError("bar computation needs weight " + std::to_string(w));
}

std::uint32_t BarComplex::id(std::size_t m, std::size_t i) const {
    require_slot(m);
    if (m > bound_ || i >= offset_[m + 1] - offset_[m]) throw BoundsError("no such basis element of A");
    return static_cast<std::uint32_t>(offset_[m] + i);
}

const SparseVector& BarComplex::product(std::uint32_t x, std::uint32_t y) const {
    const std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | y;
    {
        std::lock_guard lock(mutex_);
        if (auto it = products_.find(key); it != products_.end()) return it->second;
    }
    const std::size_t wx = weight_of(x), wy = weight_of(y);
    SparseVector out;
    if (wx + wy <= bound_) {
        out = ids_of(a_.multiply(a_.basis_element(wx, local_index(x)), a_.basis_element(wy, local_index(y))));
    } else {
        require_slot(wx + wy);
    }
    std::lock_guard lock(mutex_);
    return products_.emplace(key, std::move(out)).first->second;
}

SparseVector BarComplex::ids_of(const AlgebraElement& e) const {
    SparseVector out;
    if (e.coords.empty()) return out;
    require_slot(e.weight);
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        if (!e.coords[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(offset_[e.weight] + i), e.coords[i]);
    return out;
}

BarElement BarComplex::bar_differential(const BarElement& x) const {
    BarElement out;
    for (const auto& [w, c] : x) {
        if (w.size() < 2) throw NonComposable("b' needs at least two slots");
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const Scalar sc = i % 2 ? -c : c;
            for (const auto& [pid, pc] : product(w[i], w[i + 1])) {
                BarWord v;
                v.reserve(w.size() - 1);
                v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(i));
                v.push_back(pid);
                v.insert(v.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                add_term(out, v, sc * pc);
            }
        }
    }
    return out;
}

BarElement BarComplex::extra_degeneracy(const BarElement& x) const {
    BarElement out;
    for (const auto& [w, c] : x) {
        if (w.size() >= 2 && weight_of(w[0]) == 0) continue;
        BarWord v;
        v.reserve(w.size() + 1);
        v.push_back(unit());
        v.insert(v.end(), w.begin(), w.end());
        add_term(out, v, c);
    }
    return out;
}

BarElement BarComplex::augmentation(const BarElement& x) const {
    for (const auto& [w, c] : x)
        if (w.size() != 2) throw NonComposable("the augmentation acts on A ⊗ A");
    return bar_differential(x);
}

BarElement BarComplex::act(const SparseVector& l, const BarElement& x, const SparseVector& r) const {
    BarElement out;
    for (const auto& [w, c] : x)
        for (const auto& [lid, lc] : l)
            for (const auto& [a0, c0] : product(lid, w.front()))
                for (const auto& [rid, rc] : r)
                    for (const auto& [a1, c1] : product(w.size() == 1 ? a0 : w.back(), rid)) {
                        BarWord v = w;
                        if (w.size() == 1) {
                            v[0] = a1;
                        } else {
                            v.front() = a0;
                            v.back() = a1;
                        }
                        add_term(out, v, c * lc * c0 * rc * c1);
                    }
    return out;
}

const std::vector<BarWord>& BarComplex::tuples(std::size_t p, std::size_t s) const {
    return cache_get(mutex_, tuples_, std::make_pair(p, s), [&] {
        auto out = std::make_unique<std::vector<BarWord>>();
        BarWord cur;
        auto rec = [&](auto&& self, std::size_t left, std::size_t remaining) -> void {
            if (left == 0) {
                if (remaining == 0) out->push_back(cur);
                return;
            }
            // every later slot needs weight >= 1
            for (std::size_t m = 1; m + (left - 1) <= remaining; ++m) {
                require_slot(m);
                if (m > bound_) break;
                for (std::size_t i = offset_[m]; i < offset_[m + 1]; ++i) {
                    cur.push_back(static_cast<std::uint32_t>(i));
                    self(self, left - 1, remaining - m);
                    cur.pop_back();
                }
            }
        };
        rec(rec, p, s);
        return out;
    });
}

const std::vector<BarWord>& BarComplex::chain_basis(std::size_t p, std::size_t w) const {
    return cache_get(mutex_, chains_, std::make_pair(p, w), [&] {
        auto out = std::make_unique<std::vector<BarWord>>();
        for (std::size_t s = p; s <= w; ++s) {
            const std::size_t mw = w - s;
            require_slot(mw);
            if (mw > bound_) continue;
            for (const BarWord& t : tuples(p, s))
                for (std::size_t i = offset_[mw]; i < offset_[mw + 1]; ++i) {
                    BarWord v{static_cast<std::uint32_t>(i)};
                    v.insert(v.end(), t.begin(), t.end());
                    out->push_back(std::move(v));
                }
        }
        return out;
    });
}

Vector BarComplex::chain_vector(std::size_t p, std::size_t w, const BarElement& z) const {
    const auto& basis = chain_basis(p, w);
    const auto& index = cache_get(mutex_, chain_index_, std::make_pair(p, w), [&] {
        auto m = std::make_unique<std::map<BarWord, std::size_t>>();
        for (std::size_t i = 0; i < basis.size(); ++i) m->emplace(basis[i], i);
        return m;
    });
    Vector v = zero_vector(field(), basis.size());
    for (const auto& [word, c] : z) {
        auto it = index.find(word);
        if (it == index.end()) throw NonComposable("bar word outside the chain cell");
        v[it->second] += c;
    }
    return v;
}

BarElement BarComplex::chain_element(std::size_t p, std::size_t w, const Vector& v) const {
    const auto& basis = chain_basis(p, w);
    if (v.size() != basis.size()) throw NonComposable("chain vector length mismatch");
    BarElement out;
    for (std::size_t i = 0; i < v.size(); ++i) add_term(out, basis[i], v[i]);
    return out;
}

BarElement BarComplex::hochschild_boundary(const BarElement& z) const {
    BarElement out;
    for (const auto& [w, c] : z) {
        const std::size_t p = w.size() - 1;
        if (p == 0) throw NonComposable("boundary of a degree-0 Hochschild chain");
        // m a_1 ⊗ a_2.. + Σ (-1)^i m ⊗ .. a_i a_{i+1} .. + (-1)^p a_p m ⊗ a_1..a_{p-1}
        for (std::size_t i = 0; i < p; ++i) {
            const Scalar sc = i % 2 ? -c : c;
            for (const auto& [pid, pc] : product(w[i], w[i + 1])) {
                BarWord v(w.begin(), w.begin() + static_cast<long>(i));
                v.push_back(pid);
                v.insert(v.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                add_term(out, v, sc * pc);
            }
        }
        const Scalar sc = p % 2 ? -c : c;
        for (const auto& [pid, pc] : product(w[p], w[0])) {
            BarWord v{pid};
            v.insert(v.end(), w.begin() + 1, w.end() - 1);
            add_term(out, v, sc * pc);
        }
    }
    return out;
}

Matrix BarComplex::chain_differential(std::size_t p, std::size_t w) const {
    const auto& basis = chain_basis(p, w);
    if (p == 0) return Matrix(field(), 0, basis.size());
    Matrix d(field(), chain_basis(p - 1, w).size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        BarElement e;
        e.emplace(basis[j], field().one());
        d.set_column(j, chain_vector(p - 1, w, hochschild_boundary(e)));
    }
    return d;
}

const HomologyBasis& BarComplex::homology(std::size_t p, std::size_t w) const {
    return cache_get(mutex_, cells_, std::make_tuple(0, p, static_cast<long>(w)), [&] {
        return std::make_unique<HomologyBasis>(koszul::homology(chain_differential(p, w), chain_differential(p + 1, w)));
    });
}

const BarComplex::CochainCell& BarComplex::cochain_cell(std::size_t p, long n) const {
    return cache_get(mutex_, cochain_cells_, std::make_pair(p, n), [&] {
        auto cell = std::make_unique<CochainCell>();
        for (std::size_t s = p; s <= input_bound(p); ++s) {
            const long ow = static_cast<long>(s) + n;
            if (ow < 0) continue;
            require_slot(static_cast<std::size_t>(ow));
            if (static_cast<std::size_t>(ow) > bound_) continue;
            const std::size_t d = a_.dim(static_cast<std::size_t>(ow));
            if (d == 0) continue;
            for (const BarWord& t : tuples(p, s)) {
                cell->where.emplace(t, cell->inputs.size());
                cell->inputs.push_back(t);
                cell->offset.push_back(cell->dim);
                cell->out_weight.push_back(static_cast<std::size_t>(ow));
                cell->dim += d;
            }
        }
        return cell;
    });
}

std::size_t BarComplex::cochain_dim(std::size_t p, long n) const { return cochain_cell(p, n).dim; }

HochschildCochain BarComplex::zero_cochain(std::size_t p, long n) const {
    return {p, n, zero_vector(field(), cochain_dim(p, n))};
}

std::optional<Vector> BarComplex::value(const HochschildCochain& f, const BarWord& tuple) const {
    std::size_t s = 0;
    for (auto x : tuple) s += weight_of(x);
    if (tuple.size() != f.degree) throw NonComposable("tuple length differs from the cochain degree");
    if (s > input_bound(f.degree)) return std::nullopt;
    const CochainCell& cell = cochain_cell(f.degree, f.weight);
    auto it = cell.where.find(tuple);
    const long ow = static_cast<long>(s) + f.weight;
    if (it == cell.where.end()) {
        const std::size_t d = ow < 0 || static_cast<std::size_t>(ow) > bound_ ? 0 : a_.dim(static_cast<std::size_t>(ow));
        return zero_vector(field(), d);
    }
    const std::size_t off = cell.offset[it->second];
    const std::size_t d = a_.dim(cell.out_weight[it->second]);
    return Vector(f.coords.begin() + static_cast<long>(off), f.coords.begin() + static_cast<long>(off + d));
}

void BarComplex::set_value(HochschildCochain& f, const BarWord& tuple, const Vector& v) const {
    const CochainCell& cell = cochain_cell(f.degree, f.weight);
    auto it = cell.where.find(tuple);
    if (it == cell.where.end()) throw NonComposable("tuple outside the cochain cell");
    const std::size_t off = cell.offset[it->second];
    if (v.size() != a_.dim(cell.out_weight[it->second])) throw NonComposable("value has the wrong weight");
    for (std::size_t i = 0; i < v.size(); ++i) f.coords[off + i] = v[i];
}

namespace {

// left · value (value given in local coordinates of weight vw) as global ids.
void mul_into(const BarComplex& b, std::uint32_t left, const Vector& value, std::size_t vw, const Scalar& c, bool value_on_right,
              Vector& out, std::size_t out_weight) {
    for (std::size_t j = 0; j < value.size(); ++j) {
        if (value[j].is_zero()) continue;
        const std::uint32_t vid = b.id(vw, j);
        const SparseVector& pr = value_on_right ? b.product(left, vid) : b.product(vid, left);
        for (const auto& [pid, pc] : pr) {
            if (b.weight_of(pid) != out_weight) throw NonComposable("weight mismatch in a product");
            out[b.local_index(pid)].add_mul(c * value[j], pc);
        }
    }
}

}  // namespace

HochschildCochain BarComplex::hochschild_coboundary(const HochschildCochain& f) const {
    const std::size_t p = f.degree;
    HochschildCochain out = zero_cochain(p + 1, f.weight);
    const CochainCell& cell = cochain_cell(p + 1, f.weight);
    const Scalar one = field().one();
    // b(f) = -(-1)^p [a_1 f(a_2..) + Σ_{i=1}^p (-1)^i f(..a_i a_{i+1}..) + (-1)^{p+1} f(a_1..a_p) a_{p+1}]
    const Scalar outer = p % 2 ? one : -one;
    for (std::size_t t = 0; t < cell.inputs.size(); ++t) {
        const BarWord& x = cell.inputs[t];
        const std::size_t ow = cell.out_weight[t];
        Vector acc = zero_vector(field(), a_.dim(ow));
        {
            BarWord rest(x.begin() + 1, x.end());
            auto v = value(f, rest);
            if (!v) throw BoundsError("cochain evaluated outside its window");
            mul_into(*this, x.front(), *v, ow - weight_of(x.front()), outer, true, acc, ow);
        }
        for (std::size_t i = 0; i < p; ++i) {
            const Scalar sc = (i + 1) % 2 ? -outer : outer;
            for (const auto& [pid, pc] : product(x[i], x[i + 1])) {
                BarWord v(x.begin(), x.begin() + static_cast<long>(i));
                v.push_back(pid);
                v.insert(v.end(), x.begin() + static_cast<long>(i) + 2, x.end());
                auto fv = value(f, v);
                if (!fv) throw BoundsError("cochain evaluated outside its window");
                for (std::size_t j = 0; j < fv->size(); ++j)
                    if (!(*fv)[j].is_zero()) acc[j].add_mul(sc * pc, (*fv)[j]);
            }
        }
        {
            BarWord head(x.begin(), x.end() - 1);
            auto v = value(f, head);
            if (!v) throw BoundsError("cochain evaluated outside its window");
            const Scalar sc = (p + 1) % 2 ? -outer : outer;
            mul_into(*this, x.back(), *v, ow - weight_of(x.back()), sc, false, acc, ow);
        }
        for (std::size_t j = 0; j < acc.size(); ++j) out.coords[cell.offset[t] + j] = acc[j];
    }
    return out;
}

Matrix BarComplex::cochain_differential(std::size_t p, long n) const {
    HochschildCochain e = zero_cochain(p, n);
    Matrix d(field(), cochain_dim(p + 1, n), e.coords.size());
    for (std::size_t j = 0; j < e.coords.size(); ++j) {
        e.coords[j] = field().one();
        d.set_column(j, hochschild_coboundary(e).coords);
        e.coords[j] = field().zero();
    }
    return d;
}

const HomologyBasis& BarComplex::cohomology(std::size_t p, long n) const {
    return cache_get(mutex_, cells_, std::make_tuple(1, p, n), [&] {
        Matrix d_in = p == 0 ? Matrix(field(), cochain_dim(0, n), 0) : cochain_differential(p - 1, n);
        return std::make_unique<HomologyBasis>(koszul::homology(cochain_differential(p, n), d_in));
    });
}

HochschildCochain BarComplex::cup(const HochschildCochain& f, const HochschildCochain& g) const {
    const std::size_t p = f.degree, q = g.degree;
    HochschildCochain out = zero_cochain(p + q, f.weight + g.weight);
    const CochainCell& cell = cochain_cell(p + q, out.weight);
    const Scalar sgn = (p * q) % 2 ? -field().one() : field().one();
    for (std::size_t t = 0; t < cell.inputs.size(); ++t) {
        const BarWord& x = cell.inputs[t];
        auto u = value(f, BarWord(x.begin(), x.begin() + static_cast<long>(p)));
        auto v = value(g, BarWord(x.begin() + static_cast<long>(p), x.end()));
        if (!u || !v) throw BoundsError("cochain evaluated outside its window");
        std::size_t su = 0;
        for (std::size_t i = 0; i < p; ++i) su += weight_of(x[i]);
        const long uw = static_cast<long>(su) + f.weight;
        Vector acc = zero_vector(field(), a_.dim(cell.out_weight[t]));
        for (std::size_t i = 0; i < u->size(); ++i) {
            if ((*u)[i].is_zero()) continue;
            Vector tmp = zero_vector(field(), acc.size());
            mul_into(*this, id(static_cast<std::size_t>(uw), i), *v, cell.out_weight[t] - static_cast<std::size_t>(uw), sgn * (*u)[i], true, tmp,
                     cell.out_weight[t]);
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += tmp[j];
        }
        for (std::size_t j = 0; j < acc.size(); ++j) out.coords[cell.offset[t] + j] = acc[j];
    }
    return out;
}

BarElement BarComplex::cap_left(const HochschildCochain& f, const BarElement& z) const {
    const std::size_t p = f.degree;
    BarElement out;
    for (const auto& [w, c] : z) {
        const std::size_t q = w.size() - 1;
        if (q < p) throw NonComposable("cap needs deg z >= deg f");
        BarWord tail(w.end() - static_cast<long>(p), w.end());
        auto v = value(f, tail);
        if (!v) throw BoundsError("cochain evaluated outside its window");
        std::size_t s = 0;
        for (auto x : tail) s += weight_of(x);
        const std::size_t vw = static_cast<std::size_t>(static_cast<long>(s) + f.weight);
        for (std::size_t j = 0; j < v->size(); ++j) {
            if ((*v)[j].is_zero()) continue;
            for (const auto& [pid, pc] : product(id(vw, j), w[0])) {
                BarWord o{pid};
                o.insert(o.end(), w.begin() + 1, w.end() - static_cast<long>(p));
                add_term(out, o, c * (*v)[j] * pc);
            }
        }
    }
    return out;
}

BarElement BarComplex::cap_right(const BarElement& z, const HochschildCochain& f) const {
    const std::size_t p = f.degree;
    BarElement out;
    for (const auto& [w, c] : z) {
        const std::size_t q = w.size() - 1;
        if (q < p) throw NonComposable("cap needs deg z >= deg f");
        BarWord head(w.begin() + 1, w.begin() + 1 + static_cast<long>(p));
        auto v = value(f, head);
        if (!v) throw BoundsError("cochain evaluated outside its window");
        std::size_t s = 0;
        for (auto x : head) s += weight_of(x);
        const std::size_t vw = static_cast<std::size_t>(static_cast<long>(s) + f.weight);
        const Scalar sc = (p * q) % 2 ? -c : c;
        for (std::size_t j = 0; j < v->size(); ++j) {
            if ((*v)[j].is_zero()) continue;
            for (const auto& [pid, pc] : product(w[0], id(vw, j))) {
                BarWord o{pid};
                o.insert(o.end(), w.begin() + 1 + static_cast<long>(p), w.end());
                add_term(out, o, sc * (*v)[j] * pc);
            }
        }
    }
    return out;
}

}  // namespace koszul

#include "koszul/class_calculus.hpp"

#include "koszul/error.hpp"

namespace koszul {

ClassCalculus::ClassCalculus(const KoszulComplex& k, Coefficients c) : k_(k), c_(c) {}

KoszulCochain ClassCalculus::cocycle(std::size_t p, long n, const Vector& class_coords) const {
    const HomologyBasis& h = cohomology(p, n);
    if (class_coords.size() != h.dim()) throw NonComposable("class coordinate length mismatch");
    Vector flat = zero_vector(k_.field(), h.ambient_dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (class_coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < flat.size(); ++j)
            if (!h.representatives()(i, j).is_zero()) flat[j].add_mul(class_coords[i], h.representatives()(i, j));
    }
    return k_.cochain(c_, p, n, flat);
}

KoszulCochain ClassCalculus::cocycle(std::size_t p, long n, std::size_t i) const {
    return k_.cochain(c_, p, n, cohomology(p, n).representative(i));
}

KoszulChain ClassCalculus::cycle(std::size_t q, std::size_t w, const Vector& class_coords) const {
    const HomologyBasis& h = homology(q, w);
    if (class_coords.size() != h.dim()) throw NonComposable("class coordinate length mismatch");
    Vector v = zero_vector(k_.field(), h.ambient_dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (class_coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!h.representatives()(i, j).is_zero()) v[j].add_mul(class_coords[i], h.representatives()(i, j));
    }
    return k_.chain(c_, q, w, std::move(v));
}

KoszulChain ClassCalculus::cycle(std::size_t q, std::size_t w, std::size_t i) const {
    return k_.chain(c_, q, w, homology(q, w).representative(i));
}

Vector ClassCalculus::cohomology_class(const KoszulCochain& f) const {
    if (f.coefficients != c_) throw NonComposable("cochain has the wrong coefficients");
    return cohomology(f.degree, f.weight).coordinates(KoszulComplex::flatten(f));
}

Vector ClassCalculus::homology_class(const KoszulChain& z) const {
    if (z.coefficients != c_) throw NonComposable("chain has the wrong coefficients");
    return homology(z.degree, z.weight).coordinates(z.coords);
}

template <class Build>
const Matrix& ClassCalculus::cached(const Key& key, Build build) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    auto m = std::make_unique<Matrix>(build());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(m));
    return *it->second;
}

const Matrix& ClassCalculus::cup_constants(std::size_t p, long n1, std::size_t q, long n2) const {
    return cached({0, p, n1, q, n2}, [&] {
        const std::size_t d1 = cohomology(p, n1).dim(), d2 = cohomology(q, n2).dim();
        Matrix m(k_.field(), cohomology(p + q, n1 + n2).dim(), d1 * d2);
        for (std::size_t i = 0; i < d1; ++i) {
            KoszulCochain f = cocycle(p, n1, i);
            for (std::size_t j = 0; j < d2; ++j) m.set_column(i * d2 + j, cohomology_class(cup(k_, f, cocycle(q, n2, j))));
        }
        return m;
    });
}

const Matrix& ClassCalculus::cap_left_constants(std::size_t p, long n, std::size_t q, std::size_t w) const {
    if (q < p) throw NonComposable("cap needs deg z >= deg f");
    return cached({1, p, n, q, static_cast<long>(w)}, [&] {
        const long ow = static_cast<long>(w) + n;
        const std::size_t d1 = cohomology(p, n).dim(), d2 = homology(q, w).dim();
        const std::size_t rows = ow < 0 ? 0 : homology(q - p, static_cast<std::size_t>(ow)).dim();
        Matrix m(k_.field(), rows, d1 * d2);
        if (ow < 0) return m;
        for (std::size_t i = 0; i < d1; ++i) {
            KoszulCochain f = cocycle(p, n, i);
            for (std::size_t j = 0; j < d2; ++j) m.set_column(i * d2 + j, homology_class(cap_left(k_, f, cycle(q, w, j))));
        }
        return m;
    });
}

const Matrix& ClassCalculus::cap_right_constants(std::size_t q, std::size_t w, std::size_t p, long n) const {
    if (q < p) throw NonComposable("cap needs deg z >= deg f");
    return cached({2, q, static_cast<long>(w), p, n}, [&] {
        const long ow = static_cast<long>(w) + n;
        const std::size_t d1 = homology(q, w).dim(), d2 = cohomology(p, n).dim();
        const std::size_t rows = ow < 0 ? 0 : homology(q - p, static_cast<std::size_t>(ow)).dim();
        Matrix m(k_.field(), rows, d1 * d2);
        if (ow < 0) return m;
        for (std::size_t i = 0; i < d1; ++i) {
            KoszulChain z = cycle(q, w, i);
            for (std::size_t j = 0; j < d2; ++j) m.set_column(i * d2 + j, homology_class(cap_right(k_, z, cocycle(p, n, j))));
        }
        return m;
    });
}

const Matrix& ClassCalculus::partial_cup(std::size_t p, long n) const {
    return cached({3, p, n, 0, 0}, [&] {
        const KoszulCochain e = euler_cochain(k_);
        const std::size_t d = cohomology(p, n).dim();
        Matrix m(k_.field(), cohomology(p + 1, n).dim(), d);
        for (std::size_t i = 0; i < d; ++i) m.set_column(i, cohomology_class(cup(k_, e, cocycle(p, n, i))));
        return m;
    });
}

const Matrix& ClassCalculus::partial_cap(std::size_t q, std::size_t w) const {
    return cached({4, q, static_cast<long>(w), 0, 0}, [&] {
        const std::size_t d = homology(q, w).dim();
        if (q == 0) return Matrix(k_.field(), 0, d);
        const KoszulCochain e = euler_cochain(k_);
        Matrix m(k_.field(), homology(q - 1, w).dim(), d);
        for (std::size_t i = 0; i < d; ++i) m.set_column(i, homology_class(cap_left(k_, e, cycle(q, w, i))));
        return m;
    });
}

Vector product_of_classes(const Matrix& constants, const Vector& a, const Vector& b) {
    if (a.size() * b.size() != constants.cols()) throw NonComposable("class vectors do not match the constants");
    Vector out = zero_vector(constants.field(), constants.rows());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            const std::size_t col = i * b.size() + j;
            for (std::size_t r = 0; r < out.size(); ++r)
                if (!constants(r, col).is_zero()) out[r].add_mul(c, constants(r, col));
        }
    }
    return out;
}

std::size_t HigherTable::total(std::size_t p) const {
    std::size_t t = 0;
    for (const auto& e : entries)
        if (e.degree == p) t += e.dim;
    return t;
}

HigherTable higher_table(const ClassCalculus& cc, Side s, std::size_t p_max) {
    const KoszulComplex& k = cc.complex();
    const GradedAlgebra& a = k.algebra();
    const bool finite = cc.coefficients() == Coefficients::Field || a.is_finite();
    HigherTable t;
    t.side = s;
    t.p_max = p_max;
    for (std::size_t p = 0; p <= p_max; ++p) {
        bool complete = true;
        WeightWindow win = table_window(k, cc.coefficients(), s, p, &complete);
        if (s == Side::Cohomology && !finite) {
            // ∂⌣ out of degree p needs the cell of degree p + 1 to be computable.
            win.hi = std::min(win.hi, static_cast<long>(a.w_max()) - static_cast<long>(k.nu(p + 2)));
        }
        t.complete = t.complete && complete;
        for (long w = win.lo; w <= win.hi; ++w) {
            Matrix d_out(k.field(), 0, 0), d_in(k.field(), 0, 0);
            std::size_t dim = 0;
            if (s == Side::Cohomology) {
                d_out = cc.partial_cup(p, w);
                dim = cc.cohomology(p, w).dim();
                d_in = p == 0 ? Matrix(k.field(), dim, 0) : cc.partial_cup(p - 1, w);
            } else {
                const std::size_t ww = static_cast<std::size_t>(w);
                d_out = cc.partial_cap(p, ww);
                dim = cc.homology(p, ww).dim();
                d_in = cc.partial_cap(p + 1, ww);
            }
            t.ordinary.push_back({p, w, dim});
            if (d_in.cols() > 0 && d_out.rows() > 0 && !(d_out * d_in).is_zero()) {
                t.squares_zero = false;
                continue;
            }
            t.entries.push_back({p, w, koszul::homology(d_out, d_in).dim()});
        }
    }
    return t;
}

std::string to_string(EulerOperator op) {
    switch (op) {
        case EulerOperator::CupLeft: return "e_cup_left";
        case EulerOperator::CupRight: return "cup_e_right";
        case EulerOperator::CapLeft: return "e_cap_left";
        case EulerOperator::CapRight: return "cap_e_right";
    }
    return "unknown";
}

std::vector<KoszulCochain> euler_iterates(const KoszulComplex& k, EulerOperator op, const KoszulCochain& f,
                                          std::size_t count) {
    if (op != EulerOperator::CupLeft && op != EulerOperator::CupRight)
        throw NonComposable("cap operators act on chains");
    const KoszulCochain e = euler_cochain(k);
    std::vector<KoszulCochain> out{f};
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(op == EulerOperator::CupLeft ? cup(k, e, out.back()) : cup(k, out.back(), e));
    return out;
}

std::vector<KoszulChain> euler_iterates(const KoszulComplex& k, EulerOperator op, const KoszulChain& z,
                                        std::size_t count) {
    if (op != EulerOperator::CapLeft && op != EulerOperator::CapRight)
        throw NonComposable("cup operators act on cochains");
    const KoszulCochain e = euler_cochain(k);
    std::vector<KoszulChain> out{z};
    for (std::size_t i = 0; i < count && out.back().degree > 0; ++i)
        out.push_back(op == EulerOperator::CapLeft ? cap_left(k, e, out.back()) : cap_right(k, out.back(), e));
    return out;
}

namespace {

// Structure matrix of (i, j) -> x_i * y_j - s * (y_j * x_i), as a matrix over columns i*d2 + j.
Matrix bracket_matrix(const Matrix& xy, const Matrix& yx, std::size_t d1, std::size_t d2, const Scalar& s) {
    Matrix m = xy;
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, i * d2 + j).sub_mul(s, yx(r, j * d1 + i));
    return m;
}

}  // namespace

std::vector<BracketCell> bracket_experiment(const ClassCalculus& cc, std::size_t p_max) {
    const KoszulComplex& k = cc.complex();
    const Field F = k.field();
    struct Cell {
        std::size_t p;
        long w;
        std::size_t dim;
    };
    std::vector<Cell> co, ho;
    for (std::size_t p = 0; p <= p_max; ++p) {
        WeightWindow wc = table_window(k, cc.coefficients(), Side::Cohomology, p);
        for (long n = wc.lo; n <= wc.hi; ++n)
            if (std::size_t d = cc.cohomology(p, n).dim()) co.push_back({p, n, d});
        WeightWindow wh = table_window(k, cc.coefficients(), Side::Homology, p);
        for (long w = wh.lo; w <= wh.hi; ++w)
            if (std::size_t d = cc.homology(p, static_cast<std::size_t>(w)).dim()) ho.push_back({p, w, d});
    }
    std::vector<BracketCell> out;
    for (std::size_t a = 0; a < co.size(); ++a)
        for (std::size_t b = a; b < co.size(); ++b) {
            const Cell &x = co[a], &y = co[b];
            if (x.p + y.p > p_max) continue;
            try {
                Matrix m = bracket_matrix(cc.cup_constants(x.p, x.w, y.p, y.w), cc.cup_constants(y.p, y.w, x.p, x.w),
                                          x.dim, y.dim, sign(F, x.p * y.p));
                out.push_back({"cup", x.p, y.p, x.w, y.w, x.dim * y.dim, rank(m), x.p <= 1 || y.p <= 1});
            } catch (const BoundsError&) {
            }
        }
    for (const Cell& x : co)
        for (const Cell& z : ho) {
            if (z.p < x.p) continue;
            try {
                Matrix m = bracket_matrix(cc.cap_left_constants(x.p, x.w, z.p, static_cast<std::size_t>(z.w)),
                                          cc.cap_right_constants(z.p, static_cast<std::size_t>(z.w), x.p, x.w), x.dim,
                                          z.dim, sign(F, x.p * z.p));
                out.push_back({"cap", x.p, z.p, x.w, z.w, x.dim * z.dim, rank(m), x.p <= 1 || x.p == z.p});
            } catch (const BoundsError&) {
            }
        }
    return out;
}

}  // namespace koszul

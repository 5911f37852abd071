#include "koszul/tables.hpp"

#include "koszul/error.hpp"

namespace koszul {

WeightWindow table_window(const KoszulComplex& k, Coefficients c, Side s, std::size_t p, bool* complete) {
    const GradedAlgebra& a = k.algebra();
    const long n = static_cast<long>(k.nu(p));
    const long n_next = static_cast<long>(k.nu(p + 1));
    const bool field = c == Coefficients::Field;
    const bool finite = field || a.is_finite();
    // Largest weight of M that can be nonzero.
    const long top = field ? 0 : finite ? static_cast<long>(*a.top_weight()) : -1;
    if (complete) *complete = finite;
    if (s == Side::Homology) {
        if (finite) return {n, n + top};
        return {n, static_cast<long>(a.w_max())};
    }
    if (finite) return {-n, top - n};
    return {-n, static_cast<long>(a.w_max()) - n_next};
}

std::size_t HkTable::total(std::size_t p) const {
    std::size_t t = 0;
    for (const auto& e : entries)
        if (e.degree == p) t += e.dim;
    return t;
}

HkTable hk_table(const KoszulComplex& k, Coefficients c, Side s, std::size_t p_max) {
    HkTable t;
    t.coefficients = c;
    t.side = s;
    t.p_max = p_max;
    for (std::size_t p = 0; p <= p_max; ++p) {
        bool complete = true;
        WeightWindow win = table_window(k, c, s, p, &complete);
        t.complete = t.complete && complete;
        for (long w = win.lo; w <= win.hi; ++w) {
            std::size_t d = s == Side::Homology ? k.homology(c, p, static_cast<std::size_t>(w)).dim()
                                                : k.cohomology(c, p, w).dim();
            t.entries.push_back({p, w, d});
        }
    }
    return t;
}

std::size_t KoszulityReport::dim(std::size_t p, std::size_t w) const {
    for (const auto& c : cells)
        if (c.degree == p && c.weight == w) return c.dim;
    throw BoundsError("cell outside the Koszulity window");
}

KoszulityReport koszulity_report(const KoszulComplex& k, std::size_t p_max, std::size_t w_max) {
    const GradedAlgebra& a = k.algebra();
    if (!a.is_finite() && w_max > a.w_max())
        throw BoundsError("Koszulity window exceeds the algebra weight bound");
    KoszulityReport rep;
    rep.p_max = p_max;
    rep.w_max = w_max;
    for (std::size_t w = 0; w <= w_max; ++w) {
        // ranks[p] = rank of d_p : K_p -> K_{p-1}, for 1 <= p <= p_max + 1.
        std::vector<std::size_t> ranks(p_max + 2, 0);
        std::vector<SparseMatrix> ds(p_max + 2);
        for (std::size_t p = 1; p <= p_max + 1; ++p) {
            if (k.nu(p) > w) break;
            ds[p] = k.bimodule_d(p, w);
            ranks[p] = rank(ds[p]);
            if (p >= 2 && ds[p - 1].cols() > 0 && ds[p].cols() > 0 && !(ds[p - 1] * ds[p]).is_zero())
                rep.d_squared_zero = false;
        }
        for (std::size_t p = 0; p <= p_max; ++p) {
            const std::size_t dim_k = k.bimodule_dim(p, w);
            const std::size_t h = dim_k - ranks[p] - ranks[p + 1];
            rep.cells.push_back({p, w, h});
            if (p == 0 && h != a.dim(w)) rep.degree_zero_is_algebra = false;
            if (p > 0 && h != 0 && !rep.witness) rep.witness = KoszulityCell{p, w, h};
        }
    }
    rep.verdict = rep.witness ? "NOT_KOSZUL" : "KOSZUL_UP_TO_BOUNDS";
    return rep;
}

}  // namespace koszul

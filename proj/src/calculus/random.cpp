#include "koszul/random.hpp"

namespace koszul {

Scalar Rng::scalar(Field f, int radius) {
    long span = 2L * radius + 1;
    return f.from_int(static_cast<long>(eng_() % static_cast<std::uint64_t>(span)) - radius);
}

Vector Rng::vector(Field f, std::size_t n, int radius) {
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f, radius));
    return v;
}

Vector Rng::combination(const Matrix& rows, int radius) {
    Vector v = zero_vector(rows.field(), rows.cols());
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        Scalar c = scalar(rows.field(), radius);
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < rows.cols(); ++j)
            if (!rows(r, j).is_zero()) v[j].add_mul(c, rows(r, j));
    }
    return v;
}

KoszulChain random_chain(const KoszulComplex& k, Rng& rng, Coefficients c, std::size_t p, std::size_t w) {
    return k.chain(c, p, w, rng.vector(k.field(), k.chain_dim(c, p, w)));
}

KoszulCochain random_cochain(const KoszulComplex& k, Rng& rng, Coefficients c, std::size_t p, long n) {
    return k.cochain(c, p, n, rng.vector(k.field(), k.cochain_dim(c, p, n)));
}

KoszulChain random_cycle(const KoszulComplex& k, Rng& rng, Coefficients c, std::size_t p, std::size_t w) {
    return k.chain(c, p, w, rng.combination(k.homology(c, p, w).cycles().basis()));
}

KoszulCochain random_cocycle(const KoszulComplex& k, Rng& rng, Coefficients c, std::size_t p, long n) {
    return k.cochain(c, p, n, rng.combination(k.cohomology(c, p, n).cycles().basis()));
}

KoszulCochain random_koszul_derivation(const KoszulComplex& k, Rng& rng, long n) {
    return random_cocycle(k, rng, Coefficients::Algebra, 1, n);
}

}  // namespace koszul

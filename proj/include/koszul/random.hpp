#pragma once

#include <random>

#include "koszul/koszul_complex.hpp"

namespace koszul {

/// Seeded source of exact random operands. Only the raw 64-bit engine output is used,
/// so streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::size_t below(std::size_t n) { return n ? static_cast<std::size_t>(eng_() % n) : 0; }
    /// Uniform integer in [-radius, radius], mapped into the field.
    Scalar scalar(Field f, int radius = 3);
    Vector vector(Field f, std::size_t n, int radius = 3);
    /// Random combination of the rows of m.
    Vector combination(const Matrix& rows, int radius = 3);

private:
    std::mt19937_64 eng_;
};

KoszulChain random_chain(const KoszulComplex& k, Rng& rng, Coefficients c, std::size_t p, std::size_t w);
KoszulCochain random_cochain(const KoszulComplex& k, Rng& rng, Coefficients c, std::size_t p, long n);
KoszulChain random_cycle(const KoszulComplex& k, Rng& rng, Coefficients c, std::size_t p, std::size_t w);
KoszulCochain random_cocycle(const KoszulComplex& k, Rng& rng, Coefficients c, std::size_t p, long n);
/// Random Koszul derivation (A-valued 1-cocycle) of internal weight n.
KoszulCochain random_koszul_derivation(const KoszulComplex& k, Rng& rng, long n);

}  // namespace koszul

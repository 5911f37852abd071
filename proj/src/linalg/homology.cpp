#include "koszul/homology.hpp"

#include "koszul/error.hpp"

namespace koszul {

HomologyBasis::HomologyBasis(Subspace cycles, Subspace boundaries)
    : cycles_(std::move(cycles)), boundaries_(std::move(boundaries)) {
    Field f = cycles_.field();
    const std::size_t n = cycles_.ambient_dim();
    std::vector<Vector> residues;
    for (std::size_t r = 0; r < cycles_.dim(); ++r) {
        Vector v = boundaries_.residual(cycles_.basis().row_vector(r));
        if (!koszul::is_zero(v)) residues.push_back(std::move(v));
    }
    Subspace reps = Subspace::span(f, n, residues);
    reps_ = reps.basis();
    if (boundaries_.dim() + reps_.rows() != cycles_.dim())
        throw NotAComplex("boundaries are not contained in the cycles");

    // Echelonize [B | I] with B = [boundaries; reps] to invert the basis change.
    const std::size_t nb = boundaries_.dim(), nr = reps_.rows(), total = nb + nr;
    Matrix aug(f, total, n + total);
    for (std::size_t i = 0; i < total; ++i) {
        const Matrix& src = i < nb ? boundaries_.basis() : reps_;
        std::size_t row = i < nb ? i : i - nb;
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = src(row, j);
        aug(i, n + i) = f.one();
    }
    Rref r = rref(aug);
    Matrix left(f, total, n);
    transform_ = Matrix(f, total, nr);
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < n; ++j) left(i, j) = r.reduced(i, j);
        for (std::size_t j = 0; j < nr; ++j) transform_(i, j) = r.reduced(i, n + nb + j);
    }
    std::vector<std::size_t> piv(r.pivots.begin(), r.pivots.end());
    combined_ = Subspace::from_rref({std::move(left), std::move(piv)}, n);
}

Vector HomologyBasis::coordinates(const Vector& cycle) const {
    auto c = combined_.try_coordinates(cycle);
    if (!c) throw NotMember("vector is not a cycle of this homology cell");
    Field f = cycles_.field();
    Vector out = zero_vector(f, reps_.rows());
    for (std::size_t i = 0; i < c->size(); ++i) {
        if ((*c)[i].is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j].add_mul((*c)[i], transform_(i, j));
    }
    return out;
}

HomologyBasis homology(const Matrix& d_out, const Matrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw NonComposable("homology: d_out has " + std::to_string(d_out.cols()) + " columns but d_in has " +
                            std::to_string(d_in.rows()) + " rows");
    if (d_out.rows() > 0 && d_in.cols() > 0 && !(d_out * d_in).is_zero())
        throw NotAComplex("homology: d_out * d_in is nonzero");
    return HomologyBasis(kernel(d_out), image(d_in));
}

}  // namespace koszul

#pragma once

#include "koszul/koszul_complex.hpp"

namespace koszul {

// Linear helpers on Koszul elements (shapes must agree).
void axpy(KoszulChain& acc, const Scalar& c, const KoszulChain& z);
void axpy(KoszulCochain& acc, const Scalar& c, const KoszulCochain& f);
KoszulChain scaled(const KoszulChain& z, const Scalar& c);
KoszulCochain scaled(const KoszulCochain& f, const Scalar& c);
bool is_zero(const KoszulChain& z);
bool is_zero(const KoszulCochain& f);
bool same_shape(const KoszulChain& a, const KoszulChain& b);
bool same_shape(const KoszulCochain& a, const KoszulCochain& b);
/// (-1)^e as a scalar of the field.
Scalar sign(Field f, std::size_t e);

/// f(w) for w ∈ W_{ν(p)} given in V^{⊗ν(p)}; throws NotMember when w ∉ W_{ν(p)}.
Vector evaluate(const KoszulComplex& k, const KoszulCochain& f, const TensorElement& w);

/// e_A = id_V, the 1-cochain of weight 0 with values in A.
KoszulCochain euler_cochain(const KoszulComplex& k);
/// The 1-cochain x ↦ 1 (weight -1).
KoszulCochain constant_one_cochain(const KoszulComplex& k);

/// Koszul cup product; a (p+q)-cochain of weight n_f + n_g.
KoszulCochain cup(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g);
/// Left Koszul cap f ⌢ z (needs deg z >= deg f); degree q-p and weight w + n.
KoszulChain cap_left(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z);
/// Right Koszul cap z ⌢ f.
KoszulChain cap_right(const KoszulComplex& k, const KoszulChain& z, const KoszulCochain& f);

/// [f,g] = f ⌣ g - (-1)^{pq} g ⌣ f.
KoszulCochain cup_bracket(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g);
/// [f,z] = f ⌢ z - (-1)^{pq} z ⌢ f.
KoszulChain cap_bracket(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z);

// Residuals of the graded Leibniz rules (zero when the rule holds).
KoszulCochain leibniz_cup_residual(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g);
KoszulChain leibniz_cap_left_residual(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z);
KoszulChain leibniz_cap_right_residual(const KoszulComplex& k, const KoszulChain& z, const KoszulCochain& f);

/// [e_A, f] + b_K(f) for p even, [e_A, f] - (1-N) b_K(f) for p odd.
KoszulCochain fundamental_cochain_residual(const KoszulComplex& k, const KoszulCochain& f);
/// [e_A, z] + b_K(z) for q odd, [e_A, z] - (1-N) b_K(z) for q even.
KoszulChain fundamental_chain_residual(const KoszulComplex& k, const KoszulChain& z);

// Koszul derivations: 1-cocycles, extended to derivations D_f of A.
bool is_koszul_derivation(const KoszulComplex& k, const KoszulCochain& f);
/// D_f : A_m -> A_{m+n} as a matrix.
Matrix derivation_matrix(const KoszulComplex& k, const KoszulCochain& f, std::size_t m);
/// D_f ∘ g.
KoszulCochain derivation_compose(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g);
/// (D_f ⊗ id)(z).
KoszulChain derivation_apply(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z);
/// [f,g] - b_K(D_f ∘ g) for a cocycle g.
KoszulCochain derbra_cochain_residual(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g);
/// [f,z] - b_K(D_f(z)) for a cycle z.
KoszulChain derbra_chain_residual(const KoszulComplex& k, const KoszulCochain& f, const KoszulChain& z);

// Associators.
KoszulCochain associator_cup(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g,
                             const KoszulCochain& h);
/// The cochain u with b_K(u) = as(f,g,h) when p, q, r are all odd.
KoszulCochain associator_homotopy(const KoszulComplex& k, const KoszulCochain& f, const KoszulCochain& g,
                                  const KoszulCochain& h);

enum class CapAssociator {
    LeftLeft,    // as(g,f,z) = g ⌢ (f ⌢ z) - (g ⌣ f) ⌢ z
    RightRight,  // as(z,f,g) = (z ⌢ f) ⌢ g - z ⌢ (f ⌣ g)
    Middle       // as(g,z,f) = g ⌢ (z ⌢ f) - (g ⌢ z) ⌢ f
};
/// Arguments are always (outer cochain, inner cochain, chain): (g,f,z), (f,g,z) for z ⌢ f ⌢ g, (g,f,z) for the middle one.
KoszulChain associator_cap(const KoszulComplex& k, CapAssociator kind, const KoszulCochain& a,
                           const KoszulCochain& b, const KoszulChain& z);
/// The map F with F(b_K z) = -as(g,f,z) for odd p = deg f, q = deg g, r = deg z; applied to a (r-1)-chain.
KoszulChain cap_associator_homotopy(const KoszulComplex& k, const KoszulCochain& g, const KoszulCochain& f,
                                    const KoszulChain& zprime);

/// The cubic AS-regular witness: as(e_A, e_A, 1)(w) with w = x r_1 + y r_2 spanning W_4,
/// compared with (a-b)(xy-yx)(x-y) in A_3.
struct CubicWitness {
    AlgebraElement value;
    AlgebraElement expected;
    bool matches = false;
    bool nonzero = false;
    bool outside_relations = false;  // (xy-yx)(x-y) ∉ span(r_1, r_2)
};
/// Requires the algebra to be the cubic catalog entry with parameters a, b.
CubicWitness cubic_witness(const KoszulComplex& k, const Scalar& a, const Scalar& b);

}  // namespace koszul

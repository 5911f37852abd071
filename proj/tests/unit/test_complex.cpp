#include "doctest.h"
#include "koszul/error.hpp"
#include "koszul/tables.hpp"

using namespace koszul;

namespace {

AlgebraElement word_elem(const GradedAlgebra& a, std::size_t index, std::size_t len) {
    return a.word_element(WordBasis{a.g(), len}.word(index));
}

/// b_K(m ⊗ ω_k) rebuilt from d(1 ⊗ ω_k ⊗ 1) = Σ c·l ⊗ ω_j ⊗ r, using m ⊗ (l ⊗ ω ⊗ r) = r m l ⊗ ω.
Vector boundary_from_bimodule(const KoszulComplex& k, std::size_t p, std::size_t mw, std::size_t i, std::size_t kk) {
    const GradedAlgebra& a = k.algebra();
    const std::size_t w = mw + k.nu(p), wd = k.w_dim(p - 1), out_mw = w - k.nu(p - 1);
    Vector out = zero_vector(k.field(), a.dim(out_mw) * wd);
    AlgebraElement m = a.basis_element(mw, i);
    for (const auto& t : k.bimodule_generator_d(p, kk)) {
        AlgebraElement prod = a.multiply(a.multiply(word_elem(a, t.right_word, t.right_len), m),
                                         word_elem(a, t.left_word, t.left_len));
        for (std::size_t r = 0; r < prod.coords.size(); ++r) out[r * wd + t.w_index].add_mul(t.coeff, prod.coords[r]);
    }
    return out;
}

}  // namespace

TEST_CASE("chain differential is the reduction of the bimodule differential") {
    Field Q = Field::rationals();
    for (const char* name : {"truncated:3", "truncated:4", "as_cubic:1,2,5", "full:2,3"}) {
        GradedAlgebra a(catalog(name, Q), 9);
        KoszulComplex k(a);
        for (std::size_t p = 1; p <= 4; ++p) {
            if (k.w_dim(p) == 0) continue;
            for (std::size_t mw = 0; mw <= 3 && (a.is_finite() ? mw <= *a.top_weight() : true); ++mw) {
                const std::size_t w = mw + k.nu(p);
                for (std::size_t i = 0; i < a.dim(mw); ++i)
                    for (std::size_t kk = 0; kk < k.w_dim(p); ++kk) {
                        Vector e = zero_vector(Q, a.dim(mw) * k.w_dim(p));
                        e[i * k.w_dim(p) + kk] = Q.one();
                        KoszulChain z = k.chain(Coefficients::Algebra, p, w, e);
                        CHECK(k.boundary(z).coords == boundary_from_bimodule(k, p, mw, i, kk));
                    }
            }
        }
    }
}

TEST_CASE("differentials square to zero") {
    Field Q = Field::rationals();
    for (const char* name : {"truncated:3", "as_cubic:1,2,5", "tensor:2,3"}) {
        GradedAlgebra a(catalog(name, Q), 8);
        KoszulComplex k(a);
        for (Coefficients c : {Coefficients::Algebra, Coefficients::Field})
            for (std::size_t p = 1; p <= 3; ++p)
                for (std::size_t w = k.nu(p + 1); w <= 8; ++w) {
                    Matrix d = k.chain_differential(c, p, w) * k.chain_differential(c, p + 1, w);
                    CHECK(d.is_zero());
                }
        for (std::size_t p = 1; p <= 3; ++p)
            for (std::size_t w = k.nu(p + 1); w <= 7; ++w) CHECK((k.bimodule_d(p, w) * k.bimodule_d(p + 1, w)).is_zero());
    }
}

TEST_CASE("truncated polynomial homology tables") {
    Field Q = Field::rationals();
    for (std::size_t N = 2; N <= 4; ++N) {
        GradedAlgebra a(truncated_polynomial(Q, N), 12);
        KoszulComplex k(a);
        HkTable h = hk_table(k, Coefficients::Algebra, Side::Homology, 5);
        HkTable c = hk_table(k, Coefficients::Algebra, Side::Cohomology, 5);
        CHECK(h.complete);
        CHECK(h.total(0) == N);
        CHECK(c.total(0) == N);
        for (std::size_t p = 1; p <= 5; ++p) {
            CHECK(h.total(p) == N - 1);
            CHECK(c.total(p) == N - 1);
        }
        // With coefficients k the differentials vanish: dims are dim W_{ν(p)} = 1.
        HkTable hk = hk_table(k, Coefficients::Field, Side::Homology, 5);
        for (std::size_t p = 0; p <= 5; ++p) CHECK(hk.total(p) == 1);
    }
}

TEST_CASE("homology with k coefficients is W") {
    Field Q = Field::rationals();
    GradedAlgebra a(catalog("as_cubic:1,2,5", Q), 9);
    KoszulComplex k(a);
    for (std::size_t p = 0; p <= 4; ++p) {
        CHECK(k.homology(Coefficients::Field, p, k.nu(p)).dim() == k.w_dim(p));
        CHECK(k.cohomology(Coefficients::Field, p, -static_cast<long>(k.nu(p))).dim() == k.w_dim(p));
    }
}

TEST_CASE("Koszulity verdicts") {
    Field Q = Field::rationals();
    for (const char* name : {"truncated:2", "truncated:3", "full:2,3"}) {
        GradedAlgebra a(catalog(name, Q), 9);
        KoszulComplex k(a);
        KoszulityReport r = koszulity_report(k, 4, 9);
        CHECK(r.verdict == "KOSZUL_UP_TO_BOUNDS");
        CHECK(r.d_squared_zero);
        CHECK(r.degree_zero_is_algebra);
    }
    // The monomial relation xyx overlaps itself in one letter, which breaks exactness in degree 2:
    // xy ⊗ xyx ⊗ 1 - 1 ⊗ xyx ⊗ yx is a cycle of weight 5.
    Presentation p = parse_presentation("generators x y\ndegree 3\nrel (x y x)\n");
    GradedAlgebra a(p, 7);
    KoszulComplex k(a);
    KoszulityReport r = koszulity_report(k, 3, 7);
    CHECK(r.verdict == "NOT_KOSZUL");
    REQUIRE(r.witness);
    CHECK(r.witness->degree == 2);
    CHECK(r.witness->weight == 5);
}

TEST_CASE("table windows and bounds") {
    Field Q = Field::rationals();
    GradedAlgebra a(catalog("as_cubic:1,2,5", Q), 6);
    KoszulComplex k(a);
    bool complete = true;
    WeightWindow w = table_window(k, Coefficients::Algebra, Side::Homology, 1, &complete);
    CHECK(!complete);
    CHECK(w.hi <= 6);
    CHECK_THROWS_AS(k.homology(Coefficients::Algebra, 1, 12), BoundsError);
}

#include "doctest.h"
#include "koszul/bar.hpp"
#include "koszul/tables.hpp"

using namespace koszul;

TEST_CASE("comparison map in degree one") {
    Field Q = Field::rationals();
    GradedAlgebra a(truncated_polynomial(Q, 3), 12);
    KoszulComplex k(a);
    BarComplex b(a);
    Comparison c(k, b, 5);
    BarElement expect{{BarWord{b.unit(), b.id(1, 0), b.unit()}, Q.one()}};
    CHECK(c.chi(1, 0) == expect);
    CHECK(c.chi(0, 0) == BarElement{{BarWord{b.unit(), b.unit()}, Q.one()}});
}

TEST_CASE("comparison map matches the truncated closed form") {
    Field Q = Field::rationals();
    for (std::size_t N = 2; N <= 4; ++N) {
        GradedAlgebra a(truncated_polynomial(Q, N), 12);
        KoszulComplex k(a);
        BarComplex b(a);
        Comparison c(k, b, 5);
        for (std::size_t p = 0; p <= 5; ++p) {
            CHECK(c.chi(p, 0) == chi_closed_form_truncated(b, p));
            if (p >= 1) CHECK(c.square_commutes(p));
        }
    }
}

TEST_CASE("extra degeneracy is a contraction") {
    Field Q = Field::rationals();
    for (const char* name : {"truncated:3", "full:2,2"}) {
        GradedAlgebra a(catalog(name, Q), 8);
        BarComplex b(a);
        Rng rng(4);
        ContractionReport r = contraction_check(b, rng, 3, 60);
        CHECK(r.trials == 60);
        CHECK(r.failures == 0);
        CHECK(r.s_squared_failures == 0);
    }
}

TEST_CASE("Hochschild homology agrees with Koszul homology") {
    Field Q = Field::rationals();
    GradedAlgebra a(truncated_polynomial(Q, 3), 12);
    KoszulComplex k(a);
    BarComplex b(a);
    Comparison c(k, b, 4);
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t w = k.nu(p); w <= k.nu(p) + 2; ++w) {
            CHECK(b.homology(p, w).dim() == k.homology(Coefficients::Algebra, p, w).dim());
            CHECK(c.chain_square_commutes(p, w));
        }
    for (std::size_t p = 0; p <= 3; ++p)
        for (long n = -static_cast<long>(k.nu(p)); n <= -static_cast<long>(k.nu(p)) + 2; ++n)
            CHECK(b.cohomology(p, n).dim() == k.cohomology(Coefficients::Algebra, p, n).dim());
}

TEST_CASE("comparison is not multiplicative at cochain level when N > 2") {
    Field Q = Field::rationals();
    GradedAlgebra a(truncated_polynomial(Q, 4), 12);
    KoszulComplex k(a);
    BarComplex b(a);
    Comparison c(k, b, 4);
    NonMorphismWitness w = non_morphism_witness(c);
    CHECK(w.chi_star_f_zero);
    CHECK(w.cup_matches);
    CHECK(w.cap_matches);
    CHECK(!is_zero(w.expected_cap));
}

#include "doctest.h"
#include "koszul/calculus.hpp"
#include "koszul/random.hpp"
#include "koszul/verify.hpp"

using namespace koszul;

TEST_CASE("truncated closed forms for cup and cap") {
    Field Q = Field::rationals();
    for (std::size_t N = 2; N <= 5; ++N) {
        GradedAlgebra a(truncated_polynomial(Q, N), 12);
        KoszulComplex k(a);
        ClosedFormReport r = truncated_closed_form_check(k, 4);
        CHECK(r.cup_checks > 0);
        CHECK(r.cap_checks > 0);
        CHECK(r.cup_failures == 0);
        CHECK(r.cap_failures == 0);
    }
}

TEST_CASE("Euler cochain evaluates to the identity of V") {
    Field Q = Field::rationals();
    GradedAlgebra a(catalog("as_cubic:1,2,5", Q), 8);
    KoszulComplex k(a);
    KoszulCochain e = euler_cochain(k);
    CHECK(e.degree == 1);
    CHECK(e.weight == 0);
    for (Letter l = 0; l < 2; ++l) {
        Vector v = evaluate(k, e, TensorElement::word(Q, 2, Word{l}));
        CHECK(v == a.word_element(Word{l}).coords);
    }
    CHECK(is_zero(k.coboundary(e)));
    CHECK(is_zero(cup(k, e, e)));
}

TEST_CASE("the unit of A is a two-sided unit") {
    Field Q = Field::rationals();
    GradedAlgebra a(catalog("truncated:4", Q), 12);
    KoszulComplex k(a);
    Rng rng(9);
    KoszulCochain one = k.zero_cochain(Coefficients::Algebra, 0, 0);
    one.values(0, 0) = Q.one();
    for (int t = 0; t < 10; ++t) {
        const std::size_t p = 1 + rng.below(4);
        KoszulCochain f = random_cochain(k, rng, Coefficients::Algebra, p, -static_cast<long>(k.nu(p)) + 1);
        CHECK(cup(k, one, f).values == f.values);
        CHECK(cup(k, f, one).values == f.values);
        KoszulChain z = random_chain(k, rng, Coefficients::Algebra, p, k.nu(p) + 1);
        CHECK(cap_left(k, one, z).coords == z.coords);
        CHECK(cap_right(k, z, one).coords == z.coords);
    }
}

TEST_CASE("cup Leibniz rule on random cochains") {
    Field Q = Field::rationals();
    for (const char* name : {"truncated:3", "as_cubic:1,2,5"}) {
        GradedAlgebra a(catalog(name, Q), 9);
        KoszulComplex k(a);
        Rng rng(17);
        for (int t = 0; t < 20; ++t) {
            const std::size_t p = rng.below(3), q = rng.below(3);
            KoszulCochain f = random_cochain(k, rng, Coefficients::Algebra, p, -static_cast<long>(k.nu(p)) + 1);
            KoszulCochain g = random_cochain(k, rng, Coefficients::Algebra, q, -static_cast<long>(k.nu(q)));
            CHECK(is_zero(leibniz_cup_residual(k, f, g)));
            KoszulChain z = random_chain(k, rng, Coefficients::Algebra, p + q + 1, k.nu(p + q + 1) + 1);
            CHECK(is_zero(leibniz_cap_left_residual(k, f, z)));
            CHECK(is_zero(leibniz_cap_right_residual(k, z, f)));
        }
    }
}

TEST_CASE("cubic associator witness") {
    Field Q = Field::rationals();
    struct Case {
        long a, b, c;
    };
    for (Case cs : {Case{1, 2, 5}, Case{2, 1, 3}}) {
        GradedAlgebra alg(as_cubic(Q, Q.from_int(cs.a), Q.from_int(cs.b), Q.from_int(cs.c)), 8);
        KoszulComplex k(alg);
        CubicWitness w = cubic_witness(k, Q.from_int(cs.a), Q.from_int(cs.b));
        CHECK(w.matches);
        CHECK(w.nonzero);
        CHECK(w.outside_relations);
        // With h the constant map V -> k and e ⌣ e = 0, e ⌣ (e ⌣ h) = -as(e, e, h).
        KoszulCochain e = euler_cochain(k), h = constant_one_cochain(k);
        KoszulCochain as = associator_cup(k, e, e, h);
        CHECK(!is_zero(as));
        CHECK(cup(k, e, cup(k, e, h)).values == scaled(as, -Q.one()).values);
    }
}

#include "doctest.h"
#include "koszul/error.hpp"
#include "koszul/graded_algebra.hpp"
#include "koszul/random.hpp"

using namespace koszul;

namespace {

/// I_m as the sum of the padded copies of R, computed without the normal-form machinery.
Subspace brute_ideal(const GradedAlgebra& a, std::size_t m) {
    const std::size_t N = a.N(), g = a.g();
    if (m < N) return Subspace::zero(a.field(), word_count(g, m));
    std::vector<Subspace> parts;
    for (std::size_t i = 0; i + N <= m; ++i) parts.push_back(padded_relation_space(g, i, a.relation_space(), m - N - i));
    return sum_subspaces(parts);
}

}  // namespace

TEST_CASE("presentation parser") {
    Presentation p = parse_presentation(
        "# cubic\n"
        "field Q\n"
        "generators x y\n"
        "degree 3\n"
        "rel 1*(y y x) + 2/3*(x x x) - (y x y)\n");
    CHECK(p.g() == 2);
    CHECK(p.degree == 3);
    REQUIRE(p.relations.size() == 1);
    const Field Q = p.field;
    WordBasis b{2, 3};
    CHECK(p.relations[0].coefficients()[b.index(Word{1, 1, 0})] == Q.one());
    CHECK(p.relations[0].coefficients()[b.index(Word{0, 0, 0})] == Q.parse_scalar("2/3"));
    CHECK(p.relations[0].coefficients()[b.index(Word{1, 0, 1})] == -Q.one());
    Presentation back = parse_presentation(p.to_text());
    CHECK(back.relations[0] == p.relations[0]);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_presentation("generators x y\ndegree 2\nrel (x z)\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column > 1);
    }
    try {
        parse_presentation("generators x\ndegree 2\nbogus line\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 1);
    }
    CHECK_THROWS_AS(parse_presentation("generators x\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generators x x\ndegree 2\n"), ParseError);
}

TEST_CASE("catalog validation") {
    Field Q = Field::rationals();
    CHECK_THROWS_AS(catalog("truncated:1", Q), ConfigError);
    CHECK_THROWS_AS(catalog("bogus:3", Q), ConfigError);
    CHECK_THROWS_AS(catalog("truncated", Q), ConfigError);
    CHECK_THROWS_AS(catalog("file:/nonexistent/presentation.txt", Q), ConfigError);
    CHECK_THROWS_AS(catalog("truncated:3", Field::prime(3)), ConfigError);
    CHECK_NOTHROW(catalog("truncated:3", Field::prime(5)));
}

TEST_CASE("Hilbert functions of catalog algebras") {
    Field Q = Field::rationals();
    for (std::size_t N = 2; N <= 5; ++N) {
        GradedAlgebra a(truncated_polynomial(Q, N), 12);
        REQUIRE(a.is_finite());
        CHECK(*a.top_weight() == N - 1);
        for (std::size_t m = 0; m < N; ++m) CHECK(a.dim(m) == 1);
        CHECK(a.dim(N) == 0);
    }
    GradedAlgebra t(tensor_algebra(Q, 2, 3), 6);
    for (std::size_t m = 0; m <= 6; ++m) CHECK(t.dim(m) == word_count(2, m));
    GradedAlgebra full(full_relations(Q, 2, 3), 6);
    CHECK(full.dim(2) == 4);
    CHECK(full.dim(3) == 0);
    // Cubic AS-regular algebras have Hilbert series 1/((1-t)^2 (1-t^2)).
    GradedAlgebra as(catalog("as_cubic:1,2,5", Q), 8);
    const std::size_t expect[] = {1, 2, 4, 6, 9, 12, 16, 20, 25};
    for (std::size_t m = 0; m <= 8; ++m) CHECK(as.dim(m) == expect[m]);
}

TEST_CASE("normal forms agree with the brute-force ideal") {
    Field Q = Field::rationals();
    for (const char* name : {"as_cubic:1,2,5", "truncated:3", "full:2,3"}) {
        GradedAlgebra a(catalog(name, Q), 7);
        for (std::size_t m = 0; m <= 6; ++m) {
            Subspace I = brute_ideal(a, m);
            CHECK(a.dim(m) == word_count(a.g(), m) - I.dim());
            WordBasis b{a.g(), m};
            for (std::size_t w = 0; w < b.dim(); ++w) {
                Word word = b.word(w);
                TensorElement t = TensorElement::word(Q, a.g(), word);
                TensorElement diff = t - a.lift(a.word_element(word));
                CHECK(I.contains(diff.coefficients()));
            }
        }
    }
}

TEST_CASE("multiplication is associative and unital") {
    Field Q = Field::rationals();
    GradedAlgebra a(catalog("as_cubic:1,2,5", Q), 9);
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        auto elem = [&](std::size_t m) { return AlgebraElement{m, rng.vector(Q, a.dim(m))}; };
        AlgebraElement x = elem(rng.below(3)), y = elem(rng.below(3)), z = elem(rng.below(3));
        CHECK(a.multiply(a.multiply(x, y), z).coords == a.multiply(x, a.multiply(y, z)).coords);
        CHECK(a.multiply(a.one(), x).coords == x.coords);
        CHECK(a.multiply(x, a.one()).coords == x.coords);
    }
}

TEST_CASE("W spaces") {
    Field Q = Field::rationals();
    GradedAlgebra tr(truncated_polynomial(Q, 3), 12);
    for (std::size_t n = 0; n <= 9; ++n) CHECK(tr.W(n).dim() == 1);
    GradedAlgebra t(tensor_algebra(Q, 2, 3), 6);
    CHECK(t.W(2).dim() == 4);
    CHECK(t.W(3).dim() == 0);
    CHECK(t.W(4).dim() == 0);
    // For the cubic AS-regular algebra W_3 = R, W_4 = span(x r1 + y r2), W_5 = 0.
    GradedAlgebra as(catalog("as_cubic:1,2,5", Q), 9);
    CHECK(as.W(3).dim() == 2);
    REQUIRE(as.W(4).dim() == 1);
    const auto& rel = as.presentation().relations;
    TensorElement x = TensorElement::word(Q, 2, Word{0}), y = TensorElement::word(Q, 2, Word{1});
    TensorElement w = concat(x, rel[0]) + concat(y, rel[1]);
    CHECK(as.W(4).space.contains(w.coefficients()));
    CHECK(as.W(5).dim() == 0);
}

#include "doctest.h"
#include "koszul/error.hpp"
#include "koszul/tensor.hpp"

using namespace koszul;

TEST_CASE("word basis is big-endian") {
    WordBasis b{2, 3};
    CHECK(b.dim() == 8);
    Word w{1, 0, 1};
    CHECK(b.index(w) == 5);
    CHECK(b.word(5) == w);
    for (std::size_t i = 0; i < b.dim(); ++i) CHECK(b.index(b.word(i)) == i);
    WordBasis t{3, 2};
    CHECK(t.index(Word{2, 1}) == 7);
}

TEST_CASE("word count overflow is a resource error") {
    CHECK(word_count(1, 1000) == 1);
    CHECK(word_count(3, 4) == 81);
    CHECK_THROWS_AS(word_count(1u << 20, 10), ResourceCapError);
}

TEST_CASE("concatenation of words") {
    Field Q = Field::rationals();
    Word x{0}, y{1};
    TensorElement a = TensorElement::word(Q, 2, x), b = TensorElement::word(Q, 2, y);
    TensorElement xy = concat(a, b);
    CHECK(xy.weight() == 2);
    CHECK(xy == TensorElement::word(Q, 2, Word{0, 1}));
    TensorElement s = a + b;
    s *= Q.from_int(2);
    TensorElement sq = concat(s, s);  // 4(xx + xy + yx + yy)
    for (const auto& c : sq.coefficients()) CHECK(c == Q.from_int(4));
}

TEST_CASE("Kronecker product of subspaces and padded relations") {
    Field Q = Field::rationals();
    Vector r{Q.one(), Q.zero(), Q.zero(), -Q.one()};  // xx - yy
    Subspace R = Subspace::span(Q, 4, {r});
    Subspace V = Subspace::full(Q, 2);
    Subspace VR = tensor_subspaces(V, R);
    CHECK(VR.ambient_dim() == 8);
    CHECK(VR.dim() == 2);
    Subspace P = padded_relation_space(2, 1, R, 0);
    CHECK(P == VR);
    CHECK(padded_relation_space(2, 0, R, 1).dim() == 2);
    CHECK(padded_relation_space(2, 1, R, 1).dim() == 4);
    // x ⊗ (xx - yy) = xxx - xyy lies in V ⊗ R.
    Vector v(8, Q.zero());
    v[0] = Q.one();
    v[3] = -Q.one();
    CHECK(VR.contains(v));
}

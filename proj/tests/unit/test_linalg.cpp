#include "doctest.h"
#include "koszul/error.hpp"
#include "koszul/homology.hpp"
#include "koszul/random.hpp"
#include "koszul/sparse.hpp"

using namespace koszul;

namespace {

Matrix mat(Field f, std::vector<std::vector<long>> rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f.from_int(rows[r][c]);
    return m;
}

Vector vec(Field f, std::vector<long> v) {
    Vector out;
    for (long x : v) out.push_back(f.from_int(x));
    return out;
}

}  // namespace

TEST_CASE("rational and prime field arithmetic") {
    Field Q = Field::rationals();
    CHECK(Q.parse_scalar("3/4") + Q.parse_scalar("1/4") == Q.one());
    CHECK(Q.parse_scalar("-2/6") == Q.parse_scalar("-1/3"));
    CHECK((Q.from_int(3) / Q.from_int(6)).to_string() == "1/2");
    CHECK_THROWS_AS(Q.one() / Q.zero(), FieldError);

    Field F7 = Field::prime(7);
    CHECK(F7.from_int(3) * F7.from_int(5) == F7.one());
    CHECK(F7.from_int(-1) == F7.from_int(6));
    CHECK(F7.from_int(3).inverse() == F7.from_int(5));
    CHECK(F7.parse_scalar("1/2") == F7.from_int(4));
    CHECK_THROWS_AS(Q.one() + F7.one(), FieldError);
    CHECK_THROWS_AS(Field::prime(8), FieldError);
    CHECK(Field::parse("F_101").characteristic() == 101);
    CHECK(Field::parse("Q").is_rational());
}

TEST_CASE("hand-computed rref, kernel, image") {
    Field Q = Field::rationals();
    Matrix m = mat(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    Rref r = rref(m);
    CHECK(r.rank() == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == mat(Q, {{1, 0, 1}, {0, 1, 1}}));
    Subspace ker = kernel(m);
    CHECK(ker.dim() == 1);
    CHECK(ker.contains(vec(Q, {1, 1, -1})));
    CHECK(!ker.contains(vec(Q, {1, 0, 0})));
    Subspace im = image(m);
    CHECK(im.dim() == 2);
    CHECK(im.contains(vec(Q, {1, 2, 1})));
    CHECK(im.contains(vec(Q, {3, 6, 1})));
    CHECK(!im.contains(vec(Q, {1, 0, 0})));
    CHECK_THROWS_AS(ker.coordinates(vec(Q, {1, 0, 0})), NotMember);
}

TEST_CASE("intersection and sum of subspaces") {
    Field Q = Field::rationals();
    Subspace a = Subspace::span(Q, 3, {vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0})});
    Subspace b = Subspace::span(Q, 3, {vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1})});
    Subspace i = intersect(a, b);
    CHECK(i.dim() == 1);
    CHECK(i.contains(vec(Q, {0, 5, 0})));
    std::vector<Subspace> both{a, b};
    CHECK(sum_subspaces(both).is_full());
}

TEST_CASE("homology of a small complex") {
    Field Q = Field::rationals();
    // Q --(1,-1)--> Q^2 --(1 1)--> Q is exact at Q^2.
    Matrix d2 = mat(Q, {{1}, {-1}});
    Matrix d1 = mat(Q, {{1, 1}});
    CHECK((d1 * d2).is_zero());
    CHECK(homology(d1, d2).dim() == 0);
    // Dropping d2 leaves one class represented by (1,-1).
    HomologyBasis h = homology(d1, Matrix(Q, 2, 0));
    CHECK(h.dim() == 1);
    CHECK(!h.is_boundary(vec(Q, {1, -1})));
    Vector once = h.coordinates(vec(Q, {1, -1})), twice = h.coordinates(vec(Q, {2, -2}));
    CHECK(!is_zero(once));
    CHECK(twice[0] == Q.from_int(2) * once[0]);
    CHECK_THROWS_AS(h.coordinates(vec(Q, {1, 0})), NotMember);
}

TEST_CASE("quotient map section and projection") {
    Field Q = Field::rationals();
    Subspace s = Subspace::span(Q, 3, {vec(Q, {1, 1, 0})});
    QuotientMap q(s);
    CHECK(q.dim() == 2);
    Vector v = vec(Q, {2, 3, 5});
    Vector back = q.section(q.project(v));
    Vector diff = v;
    for (std::size_t i = 0; i < 3; ++i) diff[i] -= back[i];
    CHECK(s.contains(diff));
}

TEST_CASE("sparse rank agrees with dense rank") {
    Rng rng(11);
    for (Field f : {Field::rationals(), Field::prime(5)}) {
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
            Matrix m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (rng.below(3) == 0) m(i, j) = rng.scalar(f, 2);
            CHECK(rank(SparseMatrix::from_dense(m)) == rank(m));
            CHECK(SparseMatrix::from_dense(m).to_dense() == m);
        }
    }
}

TEST_CASE("rank-nullity on random matrices") {
    Rng rng(5);
    Field Q = Field::rationals();
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        Matrix m(Q, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.scalar(Q, 1);
        Subspace k = kernel(m);
        CHECK(k.dim() + rank(m) == c);
        for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m.apply(k.basis().row_vector(i))));
    }
}

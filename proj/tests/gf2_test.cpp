#include <doctest.h>

#include "tripart/check/oracles.hpp"
#include "tripart/check/rng.hpp"
#include "tripart/check/generators.hpp"
#include "tripart/complex.hpp"
#include "tripart/error.hpp"
#include "tripart/gf2.hpp"

using namespace tripart;

TEST_CASE("identity matrices") {
    CHECK(Gf2Matrix::identity(0).size() == 0);
    const Gf2Matrix one = Gf2Matrix::identity(1);
    CHECK(one.get(0, 0));
    CHECK(one.count_nonzero() == 1);
}

TEST_CASE("col_add and row_add xor unit vectors") {
    Gf2Matrix m = Gf2Matrix::identity(2);
    m.col_add(0, 1);
    CHECK(m.get(0, 1));
    CHECK(m.get(1, 1));
    m.col_add(0, 1);
    CHECK(m == Gf2Matrix::identity(2));

    Gf2Matrix r = Gf2Matrix::identity(2);
    r.row_add(1, 0);
    CHECK(r.get(0, 0));
    CHECK(r.get(0, 1));
    CHECK_FALSE(r.get(1, 0));
}

TEST_CASE("low and left") {
    const Gf2Matrix id = Gf2Matrix::identity(3);
    CHECK(id.low(2) == Index{2});
    CHECK(id.left(0) == Index{0});
    const Gf2Matrix zero(3);
    CHECK_FALSE(zero.low(1).has_value());
    CHECK_FALSE(zero.left(1).has_value());

    // hollow triangle: empty cell, v0 v1 v2, e01 e02 e12
    const OrderedComplex k = from_simplicial_format("0\n1\n2\n0 1\n0 2\n1 2\n", false);
    const Gf2Matrix d = boundary_matrix(k);
    CHECK(d.low(4) == Index{2});
    CHECK(d.left(1) == Index{4});
}

TEST_CASE("index checks") {
    Gf2Matrix m(2);
    CHECK_THROWS_AS(m.set(2, 0), Error);
    CHECK_THROWS_AS(m.col_add(0, 5), Error);
    try {
        m.get(0, 3);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
}

TEST_CASE("products agree with triple loops") {
    check::Rng rng(11);
    for (std::size_t n : {0u, 1u, 5u, 64u, 65u, 130u}) {
        const Gf2Matrix a = check::random_matrix(n, rng);
        const Gf2Matrix b = check::random_matrix(n, rng);
        CHECK(multiply(a, b) == check::naive_product(a, b));
        CHECK(int_product(a, b) == check::naive_int_product(a, b));
    }
    const IntMatrix id = int_product(Gf2Matrix::identity(4), Gf2Matrix::identity(4));
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j)
            CHECK(id(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("bit vectors") {
    BitVector v(130);
    v.set(3);
    v.set(129);
    CHECK(v.count() == 2);
    CHECK(v.highest() == Index{129});
    CHECK(v.lowest() == Index{3});
    CHECK(v.highest_below(129) == Index{3});
    v.flip(129);
    CHECK(v.ones() == std::vector<Index>{3});
    CHECK(BitVector(0).none());
}

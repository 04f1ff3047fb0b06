#include <doctest.h>

#include "tripart/check/generators.hpp"
#include "tripart/check/oracles.hpp"
#include "tripart/check/rng.hpp"
#include "tripart/check/samples.hpp"
#include "tripart/complex.hpp"
#include "tripart/reduction.hpp"

using namespace tripart;
namespace samples = tripart::check::samples;

TEST_CASE("zero matrix needs no reduction") {
    const Gf2Matrix zero(5);
    const ColumnReduction cr = exhaustive_column_reduce(zero);
    CHECK(cr.R == zero);
    CHECK(cr.U == Gf2Matrix::identity(5));
    CHECK(cr.pairs.empty());
    const RowReduction rr = exhaustive_row_reduce(zero);
    CHECK(rr.Q == zero);
    CHECK(rr.V == Gf2Matrix::identity(5));
}

TEST_CASE("reduction identities on the annulus") {
    const OrderedComplex k = samples::annulus();
    const Gf2Matrix d = boundary_matrix(k);
    const Reductions r = reduce(k);
    CHECK(multiply(d, r.column.U) == r.column.R);
    CHECK(multiply(r.row.V, d) == r.row.Q);
    CHECK(r.column.pairs == check::standard_pairs(d));

    std::vector<IndexPair> from_rows = r.row.pairs;
    std::sort(from_rows.begin(), from_rows.end(),
              [](const IndexPair& a, const IndexPair& b) { return a.second < b.second; });
    CHECK(from_rows == r.column.pairs);
}

TEST_CASE("birth and death counts") {
    const OrderedComplex k = samples::annulus();
    const Reductions r = reduce(k);
    const BirthDeathTable t = classify(r.column, r.row, k);
    CHECK(t.deaths[1] == 15);
    CHECK(t.births[1] == 9);
    CHECK(t.deaths[2] == 8);
    CHECK(t.births[0] + t.deaths[0] == 16);
}

TEST_CASE("Betti numbers") {
    const auto empty = betti_numbers(OrderedComplex{});
    CHECK(empty[-1] == 1);
    CHECK(empty.max_dim() == -1);

    const auto point = betti_numbers(samples::point());
    CHECK(point[-1] == 0);
    CHECK(point[0] == 0);

    const auto annulus = betti_numbers(samples::annulus());
    CHECK(annulus[0] == 0);
    CHECK(annulus[1] == 1);
    CHECK(annulus[2] == 0);

    CHECK(betti_numbers(samples::two_components())[0] == 1);
    CHECK(betti_numbers(samples::hollow_tetrahedron())[2] == 1);
    CHECK(betti_numbers(samples::wheel())[2] == 1);
    CHECK(betti_numbers(samples::wheel())[1] == 0);

    const auto co = relative_cohomology_ranks(OrderedComplex{});
    CHECK(co[-1] == 1);
    CHECK(relative_cohomology_ranks(samples::annulus())[1] == 1);
}

TEST_CASE("randomized candidate orders give the same matrices") {
    check::Rng rng(3);
    const OrderedComplex k = samples::wheel();
    const Gf2Matrix d = boundary_matrix(k);
    const ColumnReduction base = exhaustive_column_reduce(d);
    const RowReduction base_rows = exhaustive_row_reduce(d);
    for (int t = 0; t < 10; ++t) {
        const CandidatePicker pick = [&](std::size_t n) { return static_cast<std::size_t>(rng.below(n)); };
        const ColumnReduction cr = exhaustive_column_reduce(d, pick);
        const RowReduction rr = exhaustive_row_reduce(d, pick);
        CHECK(cr.R == base.R);
        CHECK(cr.U == base.U);
        CHECK(rr.Q == base_rows.Q);
        CHECK(rr.V == base_rows.V);
    }
}

TEST_CASE("Betti numbers match the rank formula on random complexes") {
    for (std::uint64_t c = 0; c < 30; ++c) {
        check::Rng rng = check::Rng::for_case(99, c);
        const OrderedComplex k = check::random_complex(rng).complex;
        CAPTURE(c);
        CHECK(betti_numbers(k) == check::rank_betti(k));
        CHECK(betti_numbers(k) == relative_cohomology_ranks(k));
    }
}

#include <doctest.h>

#include "tripart/check/samples.hpp"
#include "tripart/error.hpp"
#include "tripart/linalg.hpp"
#include "tripart/matroid.hpp"
#include "tripart/tripartition.hpp"

#include <bit>

using namespace tripart;
namespace samples = tripart::check::samples;

TEST_CASE("triangle graph families") {
    const OrderedComplex k = samples::triangle_graph();
    const SetFamily trees = enumerate_trees(k, 1);
    CHECK(trees.members.size() == 7);
    const auto maximal = trees.maximal();
    CHECK(maximal.size() == 3);
    for (auto m : maximal)
        CHECK(std::popcount(m) == 2);
    CHECK(check_matroid(trees).pass);

    // no 2-cells, so every edge is a cocycle
    const SetFamily cotrees = enumerate_cotrees(k, 1);
    CHECK(cotrees.members == std::vector<std::uint32_t>{0});
    CHECK(check_matroid(cotrees).pass);

    const SetFamily leftovers = enumerate_leftovers(k, 1);
    CHECK(leftovers.members == std::vector<std::uint32_t>{0, 1, 2, 4});
    const Report rep = check_matroid(leftovers);
    CHECK(rep.pass);
    CHECK(rep.rank == 1);
}

TEST_CASE("point trees") {
    const SetFamily trees = enumerate_trees(samples::point(), 0);
    CHECK(trees.members == std::vector<std::uint32_t>{0, 1});
    CHECK(enumerate_cotrees(samples::point(), 3).members == std::vector<std::uint32_t>{0});
}

TEST_CASE("wheel edges are too many to enumerate") {
    const OrderedComplex k = samples::wheel();
    CHECK(linalg::rank(linalg::coboundary_block(k, 1)) == 16);
    CHECK_THROWS_AS(enumerate_cotrees(k, 1, 64), Error);
    CHECK(tri_partition(k).at(1).leftover.empty());
    CHECK_THROWS_AS(enumerate_leftovers(k, 1), Error);
}

TEST_CASE("exchange counterexample") {
    SetFamily f;
    f.dim = 1;
    f.ground_set = {1, 2, 3}; // a, b, c
    f.members = {0, 1, 2, 3, 4};
    const Report rep = check_matroid(f);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.witness.size() == 2);
    CHECK(rep.witness[0].cells == std::vector<Index>{1, 2});
    CHECK(rep.witness[1].cells == std::vector<Index>{3});
}

TEST_CASE("non-closed family") {
    SetFamily f;
    f.ground_set = {1, 2};
    f.members = {0, 3};
    CHECK_FALSE(check_matroid(f).pass);
}

TEST_CASE("caps") {
    const OrderedComplex k = samples::annulus();
    CHECK_THROWS_AS(enumerate_trees(k, 1), Error);
    try {
        enumerate_cotrees(k, 1, 8);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
}

TEST_CASE("bundled small complexes") {
    for (const OrderedComplex& k : {samples::triangle_graph(), samples::hollow_tetrahedron(),
                                    samples::annulus_coarse(), samples::two_components()}) {
        const TriPartition tp = tri_partition(k);
        for (int p = 0; p <= k.dim(); ++p) {
            CAPTURE(p);
            const SetFamily trees = enumerate_trees(k, p);
            const SetFamily cotrees = enumerate_cotrees(k, p);
            const SetFamily leftovers = enumerate_leftovers(k, p);
            CHECK(check_matroid(trees).pass);
            CHECK(check_matroid(cotrees).pass);
            CHECK(check_matroid(leftovers).pass);
            CHECK(trees.rank() == tp.at(p).tree.size());
            CHECK(cotrees.rank() == tp.at(p).cotree.size());
            CHECK(leftovers.rank() == tp.at(p).leftover.size());
            CHECK(trees.contains(trees.mask_of(tp.at(p).tree)));
        }
    }
}

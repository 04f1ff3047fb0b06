#include <doctest.h>

#include "tripart/check/generators.hpp"
#include "tripart/check/oracles.hpp"
#include "tripart/check/rng.hpp"
#include "tripart/check/samples.hpp"
#include "tripart/complex.hpp"
#include "tripart/reduction.hpp"
#include "tripart/tripartition.hpp"

using namespace tripart;
namespace samples = tripart::check::samples;

TEST_CASE("annulus sizes") {
    const DimPartition p1 = tri_partition(samples::annulus()).at(1);
    CHECK(p1.tree.size() == 15);
    CHECK(p1.cotree.size() == 8);
    CHECK(p1.leftover.size() == 1);
}

TEST_CASE("wheel sizes") {
    const OrderedComplex k = samples::wheel();
    CHECK(k.count(0) == 17);
    CHECK(k.count(1) == 32);
    CHECK(k.count(2) == 17);
    const DimPartition p1 = tri_partition(k).at(1);
    CHECK(p1.tree.size() == 16);
    CHECK(p1.cotree.size() == 16);
    CHECK(p1.leftover.empty());
}

TEST_CASE("point") {
    const TriPartition tp = tri_partition(samples::point());
    CHECK(tp.at(0).tree == std::vector<Index>{1});
    CHECK(tp.at(0).cotree.empty());
    CHECK(tp.at(0).leftover.empty());
    CHECK(tp.at(-1).cotree == std::vector<Index>{0});
    CHECK(tp.at(5) == DimPartition{});
}

TEST_CASE("incremental steps") {
    IncrementalTriPartition inc;
    CHECK(inc.role(0) == Role::Leftover);
    inc.add(Cell{1, 0, {0}});
    CHECK(inc.role(1) == Role::Tree);
    CHECK(inc.role(0) == Role::Cotree);

    const OrderedComplex hollow = from_simplicial_format("0\n1\n2\n0 1\n0 2\n1 2\n", false);
    IncrementalTriPartition tri;
    for (Index i = 1; i < hollow.size(); ++i)
        tri.add(hollow.cell(i));
    CHECK(tri.role(6) == Role::Leftover);
    CHECK(tri.partition() == tri_partition(hollow));
}

TEST_CASE("incremental replay over the annulus") {
    const OrderedComplex k = samples::annulus();
    IncrementalTriPartition inc;
    for (Index i = 1; i < k.size(); ++i) {
        inc.add(k.cell(i));
        REQUIRE(inc.partition() == tri_partition(prefix(k, i)));
    }
    CHECK(inc.partition() == tri_partition(k));
}

TEST_CASE("persistence diagrams") {
    const PersistenceDiagram point = persistence_diagram(samples::point());
    REQUIRE(point.finite.size() == 1);
    CHECK(point.finite[0] == DiagramPoint{-1, 0, Index{1}});
    CHECK(point.essential.empty());

    const PersistenceDiagram hollow = persistence_diagram(from_simplicial_format("0\n1\n2\n0 1\n0 2\n1 2\n", false));
    REQUIRE(hollow.essential.size() == 1);
    CHECK(hollow.essential[0] == DiagramPoint{1, 6, std::nullopt});

    const PersistenceDiagram annulus = persistence_diagram(samples::annulus());
    std::size_t ones = 0;
    for (const DiagramPoint& pt : annulus.essential)
        ones += pt.dim == 1;
    CHECK(ones == 1);
    CHECK(annulus.essential.size() == 1);
}

TEST_CASE("betti_of_prefix") {
    const OrderedComplex k = samples::annulus();
    const PersistenceDiagram dgm = persistence_diagram(k);
    CHECK(betti_of_prefix(dgm, 0, -1) == 1);
    const auto full = betti_numbers(k);
    for (int p = -1; p <= 2; ++p)
        CHECK(betti_of_prefix(dgm, k.size() - 1, p) == full[p]);

    check::Rng rng(5);
    for (int c = 0; c < 10; ++c) {
        const OrderedComplex r = check::random_complex(rng).complex;
        const PersistenceDiagram d = persistence_diagram(r);
        for (Index ell = 0; ell < r.size(); ++ell) {
            const auto direct = betti_numbers(prefix(r, ell));
            for (int p = -1; p <= r.dim(); ++p)
                REQUIRE(betti_of_prefix(d, ell, p) == direct.value_or(p, 0));
        }
    }
}

TEST_CASE("relative cohomology of prefix pairs") {
    check::Rng rng(8);
    for (int c = 0; c < 10; ++c) {
        const OrderedComplex k = check::random_complex(rng).complex;
        const PersistenceDiagram d = persistence_diagram(k);
        for (std::size_t s = 0; s <= k.size(); ++s)
            for (int p = -1; p <= k.dim(); ++p)
                REQUIRE(relative_cohomology_rank(d, s, p) == check::relative_rank(k, s, p));
        for (int p = -1; p <= k.dim(); ++p)
            CHECK(relative_cohomology_rank(d, 0, p) == betti_numbers(k)[p]);
    }
}

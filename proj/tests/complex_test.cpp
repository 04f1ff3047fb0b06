#include <doctest.h>

#include "tripart/check/samples.hpp"
#include "tripart/complex.hpp"
#include "tripart/error.hpp"

#include <fstream>
#include <sstream>

using namespace tripart;
namespace samples = tripart::check::samples;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Parse;
}

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(TRIPART_DATA_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("smallest edge complex") {
    const OrderedComplex k = from_boundary_format("0 :\n0 :\n1 : 0 1\n");
    REQUIRE(k.size() == 4);
    CHECK(k.cell(3).faces == std::vector<Index>{1, 2});
    CHECK(k.dim() == 1);
    CHECK(k.count(-1) == 1);
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { from_boundary_format("1 : 0 1\n0 :\n0 :\n"); }) == ErrorCode::NonMonotonic);
    CHECK(code_of([] { from_boundary_format("0 :\n0 :\n1 : 0\n"); }) == ErrorCode::DdZeroViolation);
    CHECK(code_of([] { from_boundary_format("0 :\n0 :\n2 : 0 1\n"); }) == ErrorCode::DimMismatch);
    CHECK(code_of([] { from_boundary_format("0 0\n"); }) == ErrorCode::Parse);
    CHECK(code_of([] { from_simplicial_format("0 1 2\n", false); }) == ErrorCode::MissingFace);
    CHECK(code_of([] { from_simplicial_format("0\n0\n", false); }) == ErrorCode::DuplicateCell);
    CHECK(code_of([] { from_simplicial_format("1 0\n", true); }) == ErrorCode::Parse);

    try {
        from_simplicial_format("0\n1\n# comment\n0 1 2\n", false);
    } catch (const Error& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("simplicial input") {
    const OrderedComplex hollow = from_simplicial_format("0\n1\n2\n0 1\n0 2\n1 2\n", false);
    CHECK(hollow.size() == 7);
    const OrderedComplex filled = from_simplicial_format("0 1 2\n", true);
    CHECK(filled.size() == 8);
    CHECK(filled.count(2) == 1);
    const OrderedComplex listed = from_simplicial_format("0\n1\n2\n0 1\n0 2\n1 2\n0 1 2\n", true);
    CHECK(listed.counts() == filled.counts());
    CHECK(reduced_euler_characteristic(listed) == 0);
}

TEST_CASE("boundary matrix") {
    const Gf2Matrix point = boundary_matrix(samples::point());
    CHECK(point.size() == 2);
    CHECK(point.get(0, 1));
    CHECK(point.count_nonzero() == 1);

    const Gf2Matrix d = boundary_matrix(from_simplicial_format("0\n1\n2\n0 1\n0 2\n1 2\n", false));
    for (Index j = 1; j <= 3; ++j)
        CHECK(d.column_ones(j) == std::vector<Index>{0});
    for (Index j = 4; j <= 6; ++j)
        CHECK(d.column_ones(j).size() == 2);

    const OrderedComplex annulus = samples::annulus();
    const Gf2Matrix da = boundary_matrix(annulus);
    CHECK(da.size() == 49);
    CHECK(da.is_upper_triangular());
    for (Index j : annulus.cells_of_dim(2))
        CHECK(da.column_ones(j).size() == 4);
}

TEST_CASE("annulus counts and Euler characteristic") {
    const OrderedComplex k = samples::annulus();
    CHECK(k.size() == 49);
    CHECK(k.count(0) == 16);
    CHECK(k.count(1) == 24);
    CHECK(k.count(2) == 8);
    CHECK(reduced_euler_characteristic(k) == -1);
    CHECK(reduced_euler_characteristic(OrderedComplex{}) == -1);
    CHECK(reduced_euler_characteristic(samples::point()) == 0);
}

TEST_CASE("prefixes") {
    const OrderedComplex k = samples::annulus();
    CHECK(prefix(k, 0) == OrderedComplex{});
    CHECK(prefix(k, k.size() - 1) == k);
    const OrderedComplex verts = prefix(k, 16);
    CHECK(verts.size() == 17);
    CHECK(verts.dim() == 0);
    CHECK_THROWS_AS(prefix(k, 49), Error);
}

TEST_CASE("reordering rejects non-monotonic orders") {
    const OrderedComplex k = samples::triangle_graph();
    const std::vector<Index> bad{0, 4, 1, 2, 3, 5, 6};
    CHECK_THROWS_AS(reordered(k, bad), Error);
    const std::vector<Index> swap{0, 2, 1, 3, 5, 4, 6};
    CHECK(reordered(k, swap).size() == k.size());
}

TEST_CASE("bundled data files match the samples") {
    CHECK(from_boundary_format(slurp("annulus.bnd")) == samples::annulus());
    CHECK(from_boundary_format(slurp("annulus_coarse.bnd")) == samples::annulus_coarse());
    CHECK(from_boundary_format(slurp("wheel.bnd")) == samples::wheel());
    CHECK(from_simplicial_format(slurp("triangle_graph.smp"), false) == samples::triangle_graph());
    CHECK(from_simplicial_format(slurp("hollow_tetrahedron.smp"), false) == samples::hollow_tetrahedron());
    CHECK(from_simplicial_format(slurp("two_components.smp"), false) == samples::two_components());
    CHECK(from_simplicial_format(slurp("point.smp"), false) == samples::point());
}

TEST_CASE("boundary format round trip") {
    for (const auto& [name, k] : samples::all()) {
        CAPTURE(name);
        CHECK(from_boundary_format(to_boundary_format(k)) == k);
    }
}

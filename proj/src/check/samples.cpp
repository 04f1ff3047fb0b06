#include "tripart/check/samples.hpp"

#include <algorithm>
#include <utility>

namespace tripart::check::samples {

namespace {

/// Builds a complex from external vertex count, edge endpoints and 2-cells
/// given by edge positions.
OrderedComplex build(std::size_t vertices, const std::vector<std::pair<Index, Index>>& edges,
                     const std::vector<std::vector<Index>>& faces) {
    ComplexBuilder b;
    for (std::size_t v = 0; v < vertices; ++v)
        b.add(0, {0});
    const Index first_edge = b.size();
    for (auto [u, v] : edges)
        b.add(1, {1 + std::min(u, v), 1 + std::max(u, v)});
    for (const auto& f : faces) {
        std::vector<Index> cells;
        for (Index e : f)
            cells.push_back(first_edge + e);
        std::sort(cells.begin(), cells.end());
        b.add(2, std::move(cells));
    }
    return std::move(b).build();
}

} // namespace

OrderedComplex point() { return from_simplicial_format("0\n", false); }

OrderedComplex triangle_graph() { return from_simplicial_format("0\n1\n2\n0 1\n0 2\n1 2\n", false); }

OrderedComplex hollow_tetrahedron() {
    return from_simplicial_format("0\n1\n2\n3\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n", false);
}

OrderedComplex two_components() { return from_simplicial_format("0\n1\n2\n3\n4\n0 1\n0 2\n1 2\n3 4\n", false); }

OrderedComplex annulus() {
    std::vector<std::pair<Index, Index>> edges;
    for (Index k = 0; k < 8; ++k)
        edges.emplace_back(k, (k + 1) % 8); // outer ring
    for (Index k = 0; k < 8; ++k)
        edges.emplace_back(8 + k, 8 + (k + 1) % 8); // inner ring
    for (Index k = 0; k < 8; ++k)
        edges.emplace_back(k, 8 + k); // spokes
    std::vector<std::vector<Index>> quads;
    for (Index k = 0; k < 8; ++k)
        quads.push_back({k, 8 + k, 16 + k, 16 + (k + 1) % 8});
    return build(16, edges, quads);
}

OrderedComplex annulus_coarse() {
    return build(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}}, {{0, 2, 4, 5}, {1, 3, 4, 5}});
}

OrderedComplex wheel() {
    std::vector<std::pair<Index, Index>> edges;
    for (Index k = 0; k < 8; ++k)
        edges.emplace_back(0, 1 + k); // spokes
    for (Index k = 0; k < 8; ++k)
        edges.emplace_back(1 + k, 1 + (k + 1) % 8); // inner ring
    for (Index k = 0; k < 8; ++k)
        edges.emplace_back(9 + k, 9 + (k + 1) % 8); // outer ring
    for (Index k = 0; k < 8; ++k)
        edges.emplace_back(1 + k, 9 + k); // connectors
    std::vector<std::vector<Index>> faces;
    for (Index k = 0; k < 8; ++k)
        faces.push_back({k, (k + 1) % 8, 8 + k});
    for (Index k = 0; k < 8; ++k)
        faces.push_back({8 + k, 16 + k, 24 + k, 24 + (k + 1) % 8});
    faces.push_back({16, 17, 18, 19, 20, 21, 22, 23});
    return build(17, edges, faces);
}

std::vector<Named> all() {
    return {{"point", point()},
            {"triangle_graph", triangle_graph()},
            {"hollow_tetrahedron", hollow_tetrahedron()},
            {"two_components", two_components()},
            {"annulus", annulus()},
            {"annulus_coarse", annulus_coarse()},
            {"wheel", wheel()}};
}

} // namespace tripart::check::samples

#ifndef TRIPART_CHECK_SAMPLES_HPP
#define TRIPART_CHECK_SAMPLES_HPP

#include "tripart/complex.hpp"

#include <string>
#include <vector>

// Small named complexes, identical to the files under data/.
namespace tripart::check::samples {

OrderedComplex point();
/// Three vertices and three edges.
OrderedComplex triangle_graph();
/// Boundary of the tetrahedron: 4 vertices, 6 edges, 4 triangles.
OrderedComplex hollow_tetrahedron();
/// Triangle graph plus a disjoint edge.
OrderedComplex two_components();
/// Two rings of 8 vertices joined by 8 spokes, with 8 quadrangles.
OrderedComplex annulus();
/// Annulus with 4 vertices and 6 edges (parallel edges) and 2 quadrangles.
OrderedComplex annulus_coarse();
/// Sphere: center, inner and outer rings of 8 vertices; 8 triangles, 8
/// quadrangles and the outer octagon.
OrderedComplex wheel();

struct Named {
    std::string name;
    OrderedComplex complex;
};

/// Every sample above, in a fixed order.
std::vector<Named> all();

} // namespace tripart::check::samples

#endif

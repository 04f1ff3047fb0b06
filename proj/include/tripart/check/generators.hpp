#ifndef TRIPART_CHECK_GENERATORS_HPP
#define TRIPART_CHECK_GENERATORS_HPP

#include "tripart/check/rng.hpp"
#include "tripart/complex.hpp"
#include "tripart/gf2.hpp"

#include <string>
#include <vector>

namespace tripart::check {

struct RandomComplex {
    OrderedComplex complex;
    std::string simplicial_text; // the same simplices, one per line, in complex order
};

/// Random simplicial complex on 1..max_vertices vertices (all present). Each
/// simplex of dimension 1..max_dim whose facets are all present is added
/// with probability 1/2. The cells are then put in a random monotonic order.
RandomComplex random_complex(Rng& rng, int max_vertices = 12, int max_dim = 3);

/// Random monotonic order of the cells of `k` (a random linear extension of
/// the face relation), as a new-to-old index map.
std::vector<Index> random_monotonic_order(const OrderedComplex& k, Rng& rng);

/// Random monotonic order that keeps the p-cells in their current relative
/// order.
std::vector<Index> random_order_fixing_dim(const OrderedComplex& k, int p, Rng& rng);

/// Uniform random n x n matrix over Z/2.
Gf2Matrix random_matrix(std::size_t n, Rng& rng);

/// Random upper-triangular matrix with zero diagonal.
Gf2Matrix random_strict_upper(std::size_t n, Rng& rng);

} // namespace tripart::check

#endif

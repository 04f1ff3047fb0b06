#ifndef TRIPART_LINALG_HPP
#define TRIPART_LINALG_HPP

#include "tripart/complex.hpp"
#include "tripart/gf2.hpp"

#include <vector>

// Plain Gaussian elimination over Z/2 on explicit vector lists. Independent
// of the exhaustive reduction kernels; verification code uses it as the rank
// oracle.
namespace tripart::linalg {

/// Rank of the span of `vectors` (all of equal length).
std::size_t rank(std::vector<BitVector> vectors);

/// True iff `target` lies in the span of `vectors`.
bool in_span(const std::vector<BitVector>& vectors, const BitVector& target);

/// Basis of {x : sum_k x_k * columns[k] = 0}; each basis vector has length
/// columns.size().
std::vector<BitVector> nullspace(const std::vector<BitVector>& columns);

/// Boundaries of the p-cells, read from the face lists: one vector of
/// length k.size() per p-cell, in ascending cell order. For p = 0 every
/// column is the empty cell.
std::vector<BitVector> boundary_block(const OrderedComplex& k, int p);

/// Coboundaries of the p-cells: one vector per p-cell marking its
/// (p+1)-dimensional cofaces.
std::vector<BitVector> coboundary_block(const OrderedComplex& k, int p);

/// Rank of the boundary map from p-chains to (p-1)-chains.
std::size_t boundary_rank(const OrderedComplex& k, int p);

} // namespace tripart::linalg

#endif

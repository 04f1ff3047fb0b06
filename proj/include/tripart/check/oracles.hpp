#ifndef TRIPART_CHECK_ORACLES_HPP
#define TRIPART_CHECK_ORACLES_HPP

#include "tripart/complex.hpp"
#include "tripart/dim_vector.hpp"
#include "tripart/gf2.hpp"
#include "tripart/reduction.hpp"

#include <vector>

// Reference computations written without the library's reduction kernels.
namespace tripart::check {

/// Lowest non-zero row of column j by a plain scan.
MaybeIndex naive_low(const Gf2Matrix& m, Index j);
/// Leftmost non-zero column of row i by a plain scan.
MaybeIndex naive_left(const Gf2Matrix& m, Index i);
/// Triple-loop integer product.
IntMatrix naive_int_product(const Gf2Matrix& a, const Gf2Matrix& b);
/// Triple-loop product over Z/2.
Gf2Matrix naive_product(const Gf2Matrix& a, const Gf2Matrix& b);

/// Birth-death pairs of the standard persistence reduction, which only adds
/// columns until the lowest entries are distinct. Sorted by death.
std::vector<IndexPair> standard_pairs(const Gf2Matrix& d);

/// n_p - rank(boundary_p) - rank(boundary_{p+1}) with plain Gaussian
/// elimination, for p = -1 .. dim.
DimVector<long long> rank_betti(const OrderedComplex& k);

/// Rank of the p-th homology (equivalently cohomology, over a field) of the
/// pair (K, L), L the first `prefix_size` cells, from the relative chain
/// complex on the cells outside L.
long long relative_rank(const OrderedComplex& k, std::size_t prefix_size, int p);

} // namespace tripart::check

#endif

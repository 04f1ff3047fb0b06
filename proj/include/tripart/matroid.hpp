#ifndef TRIPART_MATROID_HPP
#define TRIPART_MATROID_HPP

#include "tripart/complex.hpp"
#include "tripart/report.hpp"

#include <cstdint>
#include <vector>

namespace tripart {

/// Subsets of the p-cells, each stored as a bit mask over `ground_set`
/// (bit t stands for ground_set[t]). Members are sorted and unique.
struct SetFamily {
    int dim = 0;
    std::vector<Index> ground_set;
    std::vector<std::uint32_t> members;
    bool closed_downward = false; // members were generated by downward closure

    bool contains(std::uint32_t mask) const;
    /// Largest member cardinality.
    std::size_t rank() const;
    /// Members not contained in another member.
    std::vector<std::uint32_t> maximal() const;
    /// Converts a mask back to internal cell indices.
    Chain cells(std::uint32_t mask) const;
    /// Mask of a set of internal cell indices; every cell must belong to the
    /// ground set.
    std::uint32_t mask_of(const std::vector<Index>& cells) const;

    /// Family generated by `generators` and all their subsets.
    static SetFamily downward_closure(int dim, std::vector<Index> ground_set,
                                      const std::vector<std::uint32_t>& generators);
};

/// All sets of p-cells without a non-empty p-cycle (their boundaries are
/// linearly independent). CAP_EXCEEDED when n_p > cap.
SetFamily enumerate_trees(const OrderedComplex& k, int p, std::size_t cap = 16);

/// All sets of p-cells without a non-empty p-cocycle.
SetFamily enumerate_cotrees(const OrderedComplex& k, int p, std::size_t cap = 16);

/// Leftover sets E_p over every ordering of the p-cells, with the remaining
/// cells arranged by dimension, closed downward. CAP_EXCEEDED when
/// n_p! > ordering_cap.
SetFamily enumerate_leftovers(const OrderedComplex& k, int p, std::size_t ordering_cap = 5040);

/// Re-orders `k` by dimension (stable) with the p-cells arranged as
/// `p_order`, a permutation of k.cells_of_dim(p). Returns the new-to-old
/// index map together with the reordered complex.
std::pair<std::vector<Index>, OrderedComplex> arrange_by_dimension(const OrderedComplex& k, int p,
                                                                  const std::vector<Index>& p_order);

/// Exchange property and equal cardinality of maximal members. A failing
/// report carries the violating pair (F, G) as witness; `rank` holds the
/// largest member size.
Report check_matroid(const SetFamily& family);

} // namespace tripart

#endif

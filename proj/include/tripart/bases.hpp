#ifndef TRIPART_BASES_HPP
#define TRIPART_BASES_HPP

#include "tripart/complex.hpp"
#include "tripart/reduction.hpp"
#include "tripart/report.hpp"
#include "tripart/tripartition.hpp"

#include <string_view>
#include <vector>

namespace tripart {

enum class BasisKind { Cycle, Chain, Cocycle, Cochain };

std::string_view to_string(BasisKind kind);

struct BasisElement {
    Index cell = 0;
    BasisKind kind = BasisKind::Cycle;
    Chain payload;
};

/// Canonical cycles and chains (columns of U) and canonical cocycles and
/// cochains (rows of V), one of each per cell.
struct CanonicalBasisSet {
    std::vector<int> dims;
    std::vector<Role> roles;
    std::vector<BasisElement> homology;
    std::vector<BasisElement> cohomology;

    std::size_t size() const noexcept { return dims.size(); }
    /// Cells of dimension p with the given roles, ascending.
    std::vector<Index> cells(int p, std::initializer_list<Role> roles) const;
};

CanonicalBasisSet extract_bases(const ColumnReduction& cr, const RowReduction& rr, const TriPartition& tp);

/// Canonical cycles of the cotree and leftover cells form a basis of the
/// p-cycles; the span is checked against an independently computed cycle
/// basis.
Report verify_cycle_basis(const CanonicalBasisSet& bs, const OrderedComplex& k, int p);

/// Boundaries of the canonical chains of tree cells form a basis of the
/// (p-1)-boundaries, and each equals the sum of the canonical cycles of its
/// birth-giving cells.
Report verify_boundary_basis(const CanonicalBasisSet& bs, const OrderedComplex& k, int p);

/// Canonical cycles of the leftover cells are independent modulo boundaries
/// and there are exactly beta_p of them.
Report verify_homology_generators(const CanonicalBasisSet& bs, const OrderedComplex& k, int p);

Report verify_cocycle_basis(const CanonicalBasisSet& bs, const OrderedComplex& k, int p);
Report verify_cohomology_generators(const CanonicalBasisSet& bs, const OrderedComplex& k, int p);
Report verify_coboundary_basis(const CanonicalBasisSet& bs, const OrderedComplex& k, int p);

/// The three cohomology-side reports.
std::vector<Report> verify_cobases(const CanonicalBasisSet& bs, const OrderedComplex& k, int p);

/// Enumerates all subsets of the p-tree (p-cotree) and confirms that every
/// cotree or leftover (tree or leftover) cell completes exactly one of them
/// to a cycle (cocycle), namely its stored payload. Skipped when the tree or
/// cotree exceeds `cap` cells.
Report verify_canonical_uniqueness(const CanonicalBasisSet& bs, const OrderedComplex& k, int p,
                                   std::size_t cap = 16);

/// Off-diagonal ones of U sit in rows of tree cells; those of V in columns
/// of cotree cells, always within one dimension.
Report verify_off_diagonal_support(const ColumnReduction& cr, const RowReduction& rr, const TriPartition& tp);

/// For tree cell a and cotree cell b of one dimension: a lies on the
/// canonical cycle of b iff b lies on the canonical cocycle of a.
Report verify_two_crossings(const CanonicalBasisSet& bs, int p);

/// The canonical chains and cycles of the p-cells together span all
/// p-chains, with |tree| + |cotree| + |leftover| = n_p.
Report verify_chain_decomposition(const CanonicalBasisSet& bs, const OrderedComplex& k, int p);

/// V * U over the integers.
IntMatrix intersection_matrix(const ColumnReduction& cr, const RowReduction& rr);

/// Checks every entry of V * U against the case analysis by roles and
/// payload membership: 2 for a tree/cotree pair that crosses, 1 on the
/// diagonal and on the copied U-rows and V-columns, 0 elsewhere.
Report verify_intersection_patterns(const IntMatrix& vu, const CanonicalBasisSet& bs);

/// The row/column copy rule behind the case analysis: VU is unit
/// upper-triangular, VU[i,j] = U[i,j] + V[i,j] for i != j (zero across
/// dimensions), every entry lies in {0,1,2}, and the leftover block is the
/// identity. Unlike the case analysis, this also accounts for tree/cotree
/// pairs that cross only once.
Report verify_intersection_copy_rule(const IntMatrix& vu, const ColumnReduction& cr, const RowReduction& rr,
                                     const CanonicalBasisSet& bs);

} // namespace tripart

#endif

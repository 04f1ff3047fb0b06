#ifndef TRIPART_TRIPARTITION_HPP
#define TRIPART_TRIPARTITION_HPP

#include "tripart/complex.hpp"
#include "tripart/dim_vector.hpp"
#include "tripart/reduction.hpp"

#include <optional>
#include <vector>

namespace tripart {

enum class Role { Tree, Cotree, Leftover };

std::string_view to_string(Role role);

/// The p-cells split into a maximal tree, a maximal cotree and the leftover.
struct DimPartition {
    std::vector<Index> tree;
    std::vector<Index> cotree;
    std::vector<Index> leftover;

    friend bool operator==(const DimPartition&, const DimPartition&) = default;
};

struct TriPartition {
    std::vector<Role> role; // per cell
    DimVector<DimPartition> parts;

    /// Partition of the p-cells; empty outside -1 .. dim.
    DimPartition at(int p) const { return parts.value_or(p, DimPartition{}); }

    friend bool operator==(const TriPartition&, const TriPartition&) = default;
};

/// Tree = p-cells with a non-zero column in R, cotree = p-cells with a
/// non-zero row in Q, leftover = the rest.
TriPartition tri_partition(const OrderedComplex& k);
TriPartition tri_partition(const Reductions& r, const OrderedComplex& k);

/// Tri-partition maintained along the filtration, one cell at a time.
/// Keeps the exhaustively reduced columns of every prefix, so each
/// intermediate state equals the batch result for that prefix.
class IncrementalTriPartition {
public:
    /// State of the complex {empty cell}.
    IncrementalTriPartition();

    /// Appends the next cell; its id must equal size().
    void add(const Cell& cell);

    std::size_t size() const noexcept { return dims_.size(); }
    TriPartition partition() const;
    Role role(Index i) const { return roles_.at(i); }
    MaybeIndex low(Index j) const { return lows_.at(j); }
    const BitVector& reduced_column(Index j) const { return r_.at(j); }
    const BitVector& transform_column(Index j) const { return u_.at(j); }

private:
    std::vector<int> dims_;
    std::vector<BitVector> r_;
    std::vector<BitVector> u_;
    std::vector<MaybeIndex> lows_;
    std::vector<MaybeIndex> pivot_of_;
    std::vector<Role> roles_;
};

struct DiagramPoint {
    int dim = 0;
    Index birth = 0;
    std::optional<Index> death; // empty for points at infinity

    friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Index persistence diagram of the ordering. Finite points by birth, then
/// essential points by birth.
struct PersistenceDiagram {
    std::size_t cell_count = 0;
    std::vector<DiagramPoint> finite;
    std::vector<DiagramPoint> essential;

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

PersistenceDiagram persistence_diagram(const OrderedComplex& k);
PersistenceDiagram persistence_diagram(const ColumnReduction& cr, const OrderedComplex& k);

/// Reduced Betti number of the prefix K_ell in dimension p: points with
/// dim p and birth <= ell < death.
long long betti_of_prefix(const PersistenceDiagram& diagram, Index ell, int p);

/// Rank of the reduced relative cohomology of (K, L) in dimension p, where
/// L holds the first `prefix_size` cells (0 .. cell_count). Reads the same
/// diagram with the axes reversed: finite points of dimension p-1 with
/// birth < prefix_size <= death, plus essential p-points born at or after
/// prefix_size.
long long relative_cohomology_rank(const PersistenceDiagram& diagram, std::size_t prefix_size, int p);

} // namespace tripart

#endif

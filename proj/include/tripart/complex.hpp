#ifndef TRIPART_COMPLEX_HPP
#define TRIPART_COMPLEX_HPP

#include "tripart/dim_vector.hpp"
#include "tripart/gf2.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tripart {

/// A cell of an ordered complex. Internal index 0 is always the empty cell
/// (dimension -1); every vertex has the empty cell as its only face.
struct Cell {
    Index id = 0;
    int dim = -1;
    std::vector<Index> faces; // codimension-1 faces, ascending

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// A set of cells of one dimension. Over Z/2 chains and cochains carry the
/// same data.
struct Chain {
    int dim = 0;
    std::vector<Index> cells; // ascending

    friend bool operator==(const Chain&, const Chain&) = default;
};

/// Cells in a monotonic order (faces before cofaces), augmented by the
/// empty cell at index 0. Immutable once built.
class OrderedComplex {
public:
    /// The complex {empty cell}.
    OrderedComplex();

    /// Validates and adopts `cells`; ids must be 0..n-1 in order.
    explicit OrderedComplex(std::vector<Cell> cells);

    std::size_t size() const noexcept { return cells_.size(); }
    const Cell& cell(Index i) const { return cells_.at(i); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    int dim(Index i) const { return cells_.at(i).dim; }

    /// Maximum cell dimension; -1 for {empty cell}.
    int dim() const noexcept { return max_dim_; }

    /// Number of p-cells; zero outside -1 .. dim().
    std::size_t count(int p) const { return counts_.value_or(p, 0); }
    const DimVector<std::size_t>& counts() const noexcept { return counts_; }

    /// Internal indices of the p-cells, ascending.
    std::vector<Index> cells_of_dim(int p) const;

    friend bool operator==(const OrderedComplex&, const OrderedComplex&) = default;

private:
    std::vector<Cell> cells_;
    int max_dim_ = -1;
    DimVector<std::size_t> counts_;
};

/// Incremental construction with per-cell validation. Line numbers, when
/// given, are attached to errors.
class ComplexBuilder {
public:
    ComplexBuilder();

    /// Appends a cell with internal face indices; returns its internal index.
    Index add(int dim, std::vector<Index> faces, std::size_t line = 0);

    std::size_t size() const noexcept { return cells_.size(); }
    int dim(Index i) const { return cells_.at(i).dim; }

    OrderedComplex build() &&;

private:
    std::vector<Cell> cells_;
};

/// External indices exclude the empty cell: external = internal - 1, so the
/// empty cell itself maps to -1.
inline long long external_index(Index internal) { return static_cast<long long>(internal) - 1; }

/// Parses the boundary format: one cell per line as `DIM : FACE*`, faces
/// given as 0-based external indices of earlier lines.
OrderedComplex from_boundary_format(std::string_view text);

/// Parses one simplex per line as strictly increasing vertex labels. With
/// `complete` set, missing faces are inserted right before their first
/// coface; otherwise a missing face is an error.
OrderedComplex from_simplicial_format(std::string_view text, bool complete);

/// Serializes to the boundary format.
std::string to_boundary_format(const OrderedComplex& k);

/// Boundary matrix: entry (i, j) is 1 iff cell i is a codimension-1 face of
/// cell j.
Gf2Matrix boundary_matrix(const OrderedComplex& k);

/// Alternating sum of cell counts, including the empty cell.
long long reduced_euler_characteristic(const OrderedComplex& k);

/// The subcomplex of the first ell + 1 cells.
OrderedComplex prefix(const OrderedComplex& k, Index ell);

/// Re-orders `k` so that new cell t is old cell order[t]. The result must
/// again be monotonic; order[0] must be the empty cell.
OrderedComplex reordered(const OrderedComplex& k, std::span<const Index> order);

/// Boundary of a chain, as an ascending list of (dim - 1)-cells.
Chain boundary_of(const Gf2Matrix& boundary, const Chain& c);

/// Coboundary of a cochain: the cofaces with an odd number of faces in `c`.
/// Computed as the transpose action of the boundary matrix.
Chain coboundary_of(const Gf2Matrix& boundary, const Chain& c);

} // namespace tripart

#endif

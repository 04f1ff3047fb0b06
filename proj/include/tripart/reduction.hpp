#ifndef TRIPART_REDUCTION_HPP
#define TRIPART_REDUCTION_HPP

#include "tripart/complex.hpp"
#include "tripart/dim_vector.hpp"
#include "tripart/gf2.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace tripart {

/// Chooses which eligible candidate the reduction loop processes next.
/// Receives the candidate count (candidates ordered by decreasing Low for
/// columns, increasing Left for rows) and returns a position in [0, n).
/// An empty picker selects position 0 with a faster single-pass kernel.
using CandidatePicker = std::function<std::size_t(std::size_t)>;

/// (birth, death) index pair: row i and column j with i = Low(j).
using IndexPair = std::pair<Index, Index>;

/// Result of exhaustive column reduction, R = boundary * U.
struct ColumnReduction {
    Gf2Matrix R;
    Gf2Matrix U;
    std::vector<MaybeIndex> low; // per column
    std::vector<IndexPair> pairs; // (Low(j), j) for non-zero columns, by j
};

/// Result of exhaustive row reduction, Q = V * boundary.
struct RowReduction {
    Gf2Matrix Q;
    Gf2Matrix V;
    std::vector<MaybeIndex> left; // per row
    std::vector<IndexPair> pairs; // (i, Left(i)) for non-zero rows, by i
};

/// Left-to-right column reduction that keeps clearing entries of column j
/// while any earlier non-zero column has its Low among them.
ColumnReduction exhaustive_column_reduce(const Gf2Matrix& d, const CandidatePicker& pick = {});

/// Bottom-to-top row reduction, the mirror image of the column algorithm.
/// Implemented as column reduction of the anti-transpose.
RowReduction exhaustive_row_reduce(const Gf2Matrix& d, const CandidatePicker& pick = {});

struct Reductions {
    ColumnReduction column;
    RowReduction row;
};

Reductions reduce(const OrderedComplex& k);

enum class Event { Birth, Death };

/// Births and deaths per cell, for homology (zero vs non-zero column of R)
/// and for relative cohomology (zero vs non-zero row of Q).
struct BirthDeathTable {
    std::vector<Event> homology;
    std::vector<Event> cohomology;
    DimVector<std::size_t> births;
    DimVector<std::size_t> deaths;
    DimVector<std::size_t> cobirths;
    DimVector<std::size_t> codeaths;
};

BirthDeathTable classify(const ColumnReduction& cr, const RowReduction& rr, const OrderedComplex& k);

/// Reduced Betti numbers births_p - deaths_{p+1}, for p = -1 .. dim.
DimVector<long long> betti_numbers(const BirthDeathTable& table);
DimVector<long long> betti_numbers(const OrderedComplex& k);

/// Reduced cohomology ranks cobirths_p - codeaths_{p-1}, for p = -1 .. dim.
DimVector<long long> relative_cohomology_ranks(const BirthDeathTable& table);
DimVector<long long> relative_cohomology_ranks(const OrderedComplex& k);

} // namespace tripart

#endif

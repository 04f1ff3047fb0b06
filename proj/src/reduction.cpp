#include "tripart/reduction.hpp"

#include "tripart/error.hpp"

#include <algorithm>

namespace tripart {

ColumnReduction exhaustive_column_reduce(const Gf2Matrix& d, const CandidatePicker& pick) {
    const std::size_t n = d.size();
    ColumnReduction out{d, Gf2Matrix::identity(n), std::vector<MaybeIndex>(n), {}};
    Gf2Matrix& R = out.R;
    Gf2Matrix& U = out.U;
    std::vector<MaybeIndex> pivot_of(n); // row -> reduced column with that Low

    for (Index j = 0; j < n; ++j) {
        if (!pick) {
            // Adding column l with Low(l) = r clears row r and only touches
            // rows above it, so one bottom-up sweep is exhaustive.
            for (MaybeIndex r = R.low(j); r; r = R.prev_in_column(j, *r)) {
                if (const MaybeIndex l = pivot_of[*r]) {
                    R.col_add(*l, j);
                    U.col_add(*l, j);
                }
            }
        } else {
            std::vector<Index> candidates;
            while (true) {
                candidates.clear();
                for (MaybeIndex r = R.low(j); r; r = R.prev_in_column(j, *r)) {
                    if (pivot_of[*r])
                        candidates.push_back(*pivot_of[*r]);
                }
                if (candidates.empty())
                    break;
                const std::size_t choice = pick(candidates.size());
                if (choice >= candidates.size())
                    throw Error(ErrorCode::IndexOutOfRange, "candidate picker returned an invalid position");
                R.col_add(candidates[choice], j);
                U.col_add(candidates[choice], j);
            }
        }
        out.low[j] = R.low(j);
        if (out.low[j]) {
            pivot_of[*out.low[j]] = j;
            out.pairs.emplace_back(*out.low[j], j);
        }
    }
    return out;
}

RowReduction exhaustive_row_reduce(const Gf2Matrix& d, const CandidatePicker& pick) {
    const std::size_t n = d.size();
    // Row i of Q is column n-1-i of the anti-transpose, read bottom-up, so
    // the row algorithm is the column algorithm on the reflected matrix.
    ColumnReduction mirrored = exhaustive_column_reduce(d.anti_transpose(), pick);
    RowReduction out{mirrored.R.anti_transpose(), mirrored.U.anti_transpose(), std::vector<MaybeIndex>(n), {}};
    for (const auto& [mi, mj] : mirrored.pairs) {
        const Index i = n - 1 - mj;
        const Index j = n - 1 - mi;
        out.left[i] = j;
        out.pairs.emplace_back(i, j);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

Reductions reduce(const OrderedComplex& k) {
    const Gf2Matrix d = boundary_matrix(k);
    return {exhaustive_column_reduce(d), exhaustive_row_reduce(d)};
}

BirthDeathTable classify(const ColumnReduction& cr, const RowReduction& rr, const OrderedComplex& k) {
    const std::size_t n = k.size();
    if (cr.R.size() != n || rr.Q.size() != n)
        throw Error(ErrorCode::InconsistentInputs, "reductions do not match the complex size");
    BirthDeathTable t{std::vector<Event>(n), std::vector<Event>(n), DimVector<std::size_t>(k.dim(), 0),
                      DimVector<std::size_t>(k.dim(), 0), DimVector<std::size_t>(k.dim(), 0),
                      DimVector<std::size_t>(k.dim(), 0)};
    for (Index c = 0; c < n; ++c) {
        const int p = k.dim(c);
        t.homology[c] = cr.low[c] ? Event::Death : Event::Birth;
        t.cohomology[c] = rr.left[c] ? Event::Death : Event::Birth;
        ++(t.homology[c] == Event::Birth ? t.births : t.deaths)[p];
        ++(t.cohomology[c] == Event::Birth ? t.cobirths : t.codeaths)[p];
    }
    return t;
}

DimVector<long long> betti_numbers(const BirthDeathTable& t) {
    DimVector<long long> b(t.births.max_dim(), 0);
    for (int p = -1; p <= b.max_dim(); ++p)
        b[p] = static_cast<long long>(t.births[p]) - static_cast<long long>(t.deaths.value_or(p + 1, 0));
    return b;
}

DimVector<long long> betti_numbers(const OrderedComplex& k) {
    const Reductions r = reduce(k);
    return betti_numbers(classify(r.column, r.row, k));
}

DimVector<long long> relative_cohomology_ranks(const BirthDeathTable& t) {
    DimVector<long long> b(t.cobirths.max_dim(), 0);
    for (int p = -1; p <= b.max_dim(); ++p)
        b[p] = static_cast<long long>(t.cobirths[p]) - static_cast<long long>(t.codeaths.value_or(p - 1, 0));
    return b;
}

DimVector<long long> relative_cohomology_ranks(const OrderedComplex& k) {
    const Reductions r = reduce(k);
    return relative_cohomology_ranks(classify(r.column, r.row, k));
}

} // namespace tripart

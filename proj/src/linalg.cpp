#include "tripart/linalg.hpp"

#include "tripart/error.hpp"

#include <utility>

namespace tripart::linalg {

namespace {

void check_lengths(const std::vector<BitVector>& vectors) {
    for (const auto& v : vectors) {
        if (v.size() != vectors.front().size())
            throw Error(ErrorCode::SizeMismatch, "vectors have different lengths");
    }
}

} // namespace

std::size_t rank(std::vector<BitVector> rows) {
    if (rows.empty())
        return 0;
    check_lengths(rows);
    const std::size_t width = rows.front().size();
    std::size_t r = 0;
    // Row echelon form with partial pivoting: pick any row with a 1 in the
    // current column, swap it up, clear the column below it.
    for (Index c = 0; c < width && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].test(c))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t k = r + 1; k < rows.size(); ++k) {
            if (rows[k].test(c))
                rows[k] ^= rows[r];
        }
        ++r;
    }
    return r;
}

bool in_span(const std::vector<BitVector>& vectors, const BitVector& target) {
    std::vector<BitVector> with = vectors;
    with.push_back(target);
    return rank(with) == rank(vectors);
}

std::vector<BitVector> nullspace(const std::vector<BitVector>& columns) {
    const std::size_t k = columns.size();
    if (k == 0)
        return {};
    check_lengths(columns);
    const std::size_t height = columns.front().size();

    // Reduced row echelon form of the height x k matrix, rows stored as bit
    // vectors over the k columns.
    std::vector<BitVector> rows(height, BitVector(k));
    for (Index c = 0; c < k; ++c) {
        for (Index i : columns[c].ones())
            rows[i].set(c);
    }
    std::vector<Index> pivot_cols;
    std::size_t r = 0;
    for (Index c = 0; c < k && r < height; ++c) {
        std::size_t pivot = r;
        while (pivot < height && !rows[pivot].test(c))
            ++pivot;
        if (pivot == height)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < height; ++i) {
            if (i != r && rows[i].test(c))
                rows[i] ^= rows[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(k, false);
    for (Index c : pivot_cols)
        is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (Index free = 0; free < k; ++free) {
        if (is_pivot[free])
            continue;
        BitVector x(k);
        x.set(free);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if (rows[i].test(free))
                x.set(pivot_cols[i]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<BitVector> boundary_block(const OrderedComplex& k, int p) {
    std::vector<BitVector> out;
    for (const auto& c : k.cells()) {
        if (c.dim == p)
            out.push_back(BitVector::from_indices(k.size(), c.faces));
    }
    return out;
}

std::vector<BitVector> coboundary_block(const OrderedComplex& k, int p) {
    std::vector<Index> position(k.size(), k.size());
    std::vector<BitVector> out;
    for (const auto& c : k.cells()) {
        if (c.dim == p) {
            position[c.id] = out.size();
            out.emplace_back(k.size());
        }
    }
    for (const auto& c : k.cells()) {
        if (c.dim != p + 1)
            continue;
        for (Index f : c.faces)
            out[position[f]].flip(c.id);
    }
    return out;
}

std::size_t boundary_rank(const OrderedComplex& k, int p) { return rank(boundary_block(k, p)); }

} // namespace tripart::linalg

#include "tripart/check/oracles.hpp"

#include "tripart/error.hpp"
#include "tripart/linalg.hpp"

#include <algorithm>

namespace tripart::check {

MaybeIndex naive_low(const Gf2Matrix& m, Index j) {
    MaybeIndex low;
    for (Index i = 0; i < m.size(); ++i) {
        if (m.get(i, j))
            low = i;
    }
    return low;
}

MaybeIndex naive_left(const Gf2Matrix& m, Index i) {
    for (Index j = 0; j < m.size(); ++j) {
        if (m.get(i, j))
            return j;
    }
    return std::nullopt;
}

IntMatrix naive_int_product(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::SizeMismatch, "product of matrices of different sizes");
    const std::size_t n = a.size();
    IntMatrix c(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            long long s = 0;
            for (Index t = 0; t < n; ++t)
                s += (a.get(i, t) && b.get(t, j)) ? 1 : 0;
            c(i, j) = s;
        }
    }
    return c;
}

Gf2Matrix naive_product(const Gf2Matrix& a, const Gf2Matrix& b) {
    const IntMatrix c = naive_int_product(a, b);
    Gf2Matrix out(a.size());
    for (Index i = 0; i < a.size(); ++i) {
        for (Index j = 0; j < a.size(); ++j)
            out.set(i, j, c(i, j) % 2 != 0);
    }
    return out;
}

std::vector<IndexPair> standard_pairs(const Gf2Matrix& d) {
    const std::size_t n = d.size();
    std::vector<std::vector<bool>> cols(n, std::vector<bool>(n, false));
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i)
            cols[j][i] = d.get(i, j);
    }
    auto low = [&](Index j) -> long long {
        for (Index i = n; i-- > 0;) {
            if (cols[j][i])
                return static_cast<long long>(i);
        }
        return -1;
    };
    std::vector<IndexPair> pairs;
    for (Index j = 0; j < n; ++j) {
        bool changed = true;
        while (changed) {
            changed = false;
            const long long lj = low(j);
            if (lj < 0)
                break;
            for (Index l = 0; l < j; ++l) {
                if (low(l) == lj) {
                    for (Index i = 0; i < n; ++i)
                        cols[j][i] = cols[j][i] != cols[l][i];
                    changed = true;
                    break;
                }
            }
        }
        if (const long long lj = low(j); lj >= 0)
            pairs.emplace_back(static_cast<Index>(lj), j);
    }
    return pairs;
}

DimVector<long long> rank_betti(const OrderedComplex& k) {
    DimVector<long long> b(k.dim(), 0);
    for (int p = -1; p <= k.dim(); ++p) {
        b[p] = static_cast<long long>(k.count(p)) - static_cast<long long>(linalg::boundary_rank(k, p)) -
               static_cast<long long>(linalg::boundary_rank(k, p + 1));
    }
    return b;
}

long long relative_rank(const OrderedComplex& k, std::size_t prefix_size, int p) {
    // Boundary of q-cells outside L, restricted to the faces outside L.
    auto relative_block = [&](int q) {
        std::vector<BitVector> out;
        for (const Cell& c : k.cells()) {
            if (c.dim != q || c.id < prefix_size)
                continue;
            BitVector v(k.size());
            for (Index f : c.faces) {
                if (f >= prefix_size)
                    v.set(f);
            }
            out.push_back(std::move(v));
        }
        return out;
    };
    const auto here = relative_block(p);
    return static_cast<long long>(here.size()) - static_cast<long long>(linalg::rank(here)) -
           static_cast<long long>(linalg::rank(relative_block(p + 1)));
}

} // namespace tripart::check

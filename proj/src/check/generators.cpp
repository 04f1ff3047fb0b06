#include "tripart/check/generators.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace tripart::check {

namespace {

/// Random linear extension of the order generated by face relations plus
/// the extra `after` edges (after[c] must come after c).
std::vector<Index> random_extension(const OrderedComplex& k, const std::vector<MaybeIndex>& after, Rng& rng) {
    const std::size_t n = k.size();
    std::vector<std::vector<Index>> successors(n);
    std::vector<std::size_t> waiting(n, 0);
    for (const Cell& c : k.cells()) {
        for (Index f : c.faces) {
            successors[f].push_back(c.id);
            ++waiting[c.id];
        }
    }
    for (Index c = 0; c < n; ++c) {
        if (after[c]) {
            successors[c].push_back(*after[c]);
            ++waiting[*after[c]];
        }
    }
    std::vector<Index> ready;
    for (Index c = 0; c < n; ++c) {
        if (waiting[c] == 0)
            ready.push_back(c);
    }
    std::vector<Index> order;
    order.reserve(n);
    while (!ready.empty()) {
        const std::size_t t = rng.below(ready.size());
        const Index c = ready[t];
        ready[t] = ready.back();
        ready.pop_back();
        order.push_back(c);
        for (Index s : successors[c]) {
            if (--waiting[s] == 0)
                ready.push_back(s);
        }
    }
    return order;
}

} // namespace

RandomComplex random_complex(Rng& rng, int max_vertices, int max_dim) {
    const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices)));
    std::vector<std::uint32_t> simplices; // vertex masks, by dimension then lexicographically
    std::unordered_map<std::uint32_t, Index> index_of;
    for (int u = 0; u < v; ++u)
        simplices.push_back(std::uint32_t{1} << u);

    std::vector<int> combo;
    for (int d = 1; d <= max_dim && d < v; ++d) {
        const int size = d + 1;
        combo.resize(size);
        for (int t = 0; t < size; ++t)
            combo[t] = t;
        while (true) {
            std::uint32_t mask = 0;
            for (int u : combo)
                mask |= std::uint32_t{1} << u;
            bool facets_present = true;
            for (int u : combo) {
                const std::uint32_t facet = mask & ~(std::uint32_t{1} << u);
                if (std::find(simplices.begin(), simplices.end(), facet) == simplices.end()) {
                    facets_present = false;
                    break;
                }
            }
            if (facets_present && rng.coin())
                simplices.push_back(mask);
            // next combination in lexicographic order
            int t = size - 1;
            while (t >= 0 && combo[t] == v - size + t)
                --t;
            if (t < 0)
                break;
            ++combo[t];
            for (int s = t + 1; s < size; ++s)
                combo[s] = combo[s - 1] + 1;
        }
    }

    ComplexBuilder builder;
    std::vector<std::uint32_t> mask_of_cell{0};
    for (std::uint32_t mask : simplices) {
        std::vector<Index> faces;
        if (std::popcount(mask) == 1) {
            faces.push_back(0);
        } else {
            for (std::uint32_t rest = mask; rest; rest &= rest - 1)
                faces.push_back(index_of.at(mask & ~(rest & (~rest + 1))));
            std::sort(faces.begin(), faces.end());
        }
        index_of[mask] = builder.add(std::popcount(mask) - 1, std::move(faces));
        mask_of_cell.push_back(mask);
    }
    const OrderedComplex sorted = std::move(builder).build();
    const std::vector<Index> order = random_monotonic_order(sorted, rng);

    RandomComplex out{reordered(sorted, order), {}};
    for (std::size_t t = 1; t < order.size(); ++t) {
        const std::uint32_t mask = mask_of_cell[order[t]];
        bool first = true;
        for (int u = 0; u < v; ++u) {
            if (mask & (std::uint32_t{1} << u)) {
                out.simplicial_text += (first ? "" : " ") + std::to_string(u);
                first = false;
            }
        }
        out.simplicial_text += '\n';
    }
    return out;
}

std::vector<Index> random_monotonic_order(const OrderedComplex& k, Rng& rng) {
    return random_extension(k, std::vector<MaybeIndex>(k.size()), rng);
}

std::vector<Index> random_order_fixing_dim(const OrderedComplex& k, int p, Rng& rng) {
    std::vector<MaybeIndex> after(k.size());
    const auto cells = k.cells_of_dim(p);
    for (std::size_t t = 1; t < cells.size(); ++t)
        after[cells[t - 1]] = cells[t];
    return random_extension(k, after, rng);
}

Gf2Matrix random_matrix(std::size_t n, Rng& rng) {
    Gf2Matrix m(n);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i)
            m.set(i, j, rng.coin());
    }
    return m;
}

Gf2Matrix random_strict_upper(std::size_t n, Rng& rng) {
    Gf2Matrix m(n);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < j; ++i)
            m.set(i, j, rng.coin());
    }
    return m;
}

} // namespace tripart::check

#include "tripart/matroid.hpp"

#include "tripart/error.hpp"
#include "tripart/linalg.hpp"
#include "tripart/tripartition.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace tripart {

namespace {

constexpr std::size_t kMaxGround = 31;

void check_ground(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap || n > kMaxGround)
        throw Error(ErrorCode::CapExceeded, std::string(what) + ": " + std::to_string(n) +
                                                " cells exceed the cap of " +
                                                std::to_string(std::min(cap, kMaxGround)));
}

/// Depth-first enumeration of the independent subsets of `vectors`, keeping
/// an echelon basis keyed by pivot so that each extension costs one
/// reduction.
class IndependentSets {
public:
    explicit IndependentSets(const std::vector<BitVector>& vectors)
        : vectors_(vectors), slot_(vectors.empty() ? 0 : vectors.front().size(), kNone) {}

    std::vector<std::uint32_t> run() {
        out_.push_back(0);
        extend(0, 0);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void extend(std::uint32_t mask, std::size_t next) {
        for (std::size_t t = next; t < vectors_.size(); ++t) {
            BitVector x = vectors_[t];
            while (x.any()) {
                const Index h = *x.highest();
                if (slot_[h] == kNone)
                    break;
                x ^= basis_[slot_[h]];
            }
            if (x.none())
                continue;
            const Index h = *x.highest();
            slot_[h] = basis_.size();
            basis_.push_back(std::move(x));
            const std::uint32_t grown = mask | (std::uint32_t{1} << t);
            out_.push_back(grown);
            extend(grown, t + 1);
            basis_.pop_back();
            slot_[h] = kNone;
        }
    }

    const std::vector<BitVector>& vectors_;
    std::vector<std::size_t> slot_;
    std::vector<BitVector> basis_;
    std::vector<std::uint32_t> out_;
};

SetFamily independent_family(const OrderedComplex& k, int p, const std::vector<BitVector>& vectors) {
    SetFamily f;
    f.dim = p;
    f.ground_set = k.cells_of_dim(p);
    f.members = IndependentSets(vectors).run();
    return f;
}

/// Membership test backed by a bitmap for small ground sets.
class Membership {
public:
    explicit Membership(const SetFamily& f) : family_(f) {
        if (f.ground_set.size() <= 24) {
            bitmap_.assign(std::size_t{1} << f.ground_set.size(), false);
            for (auto m : f.members)
                bitmap_[m] = true;
        }
    }
    bool operator()(std::uint32_t mask) const {
        return bitmap_.empty() ? family_.contains(mask) : mask < bitmap_.size() && bitmap_[mask];
    }

private:
    const SetFamily& family_;
    std::vector<bool> bitmap_;
};

} // namespace

bool SetFamily::contains(std::uint32_t mask) const { return std::binary_search(members.begin(), members.end(), mask); }

std::size_t SetFamily::rank() const {
    std::size_t r = 0;
    for (auto m : members)
        r = std::max<std::size_t>(r, std::popcount(m));
    return r;
}

std::vector<std::uint32_t> SetFamily::maximal() const {
    const Membership in(*this);
    std::vector<std::uint32_t> out;
    for (auto m : members) {
        bool is_max = true;
        for (std::size_t t = 0; t < ground_set.size() && is_max; ++t) {
            const std::uint32_t bit = std::uint32_t{1} << t;
            if (!(m & bit) && in(m | bit))
                is_max = false;
        }
        if (is_max)
            out.push_back(m);
    }
    return out;
}

Chain SetFamily::cells(std::uint32_t mask) const {
    Chain c{dim, {}};
    for (std::size_t t = 0; t < ground_set.size(); ++t) {
        if (mask & (std::uint32_t{1} << t))
            c.cells.push_back(ground_set[t]);
    }
    return c;
}

std::uint32_t SetFamily::mask_of(const std::vector<Index>& cells) const {
    std::uint32_t mask = 0;
    for (Index c : cells) {
        const auto it = std::lower_bound(ground_set.begin(), ground_set.end(), c);
        if (it == ground_set.end() || *it != c)
            throw Error(ErrorCode::IndexOutOfRange, "cell " + std::to_string(c) + " is not in the ground set");
        mask |= std::uint32_t{1} << (it - ground_set.begin());
    }
    return mask;
}

SetFamily SetFamily::downward_closure(int dim, std::vector<Index> ground_set,
                                      const std::vector<std::uint32_t>& generators) {
    std::set<std::uint32_t> closed{0};
    for (std::uint32_t g : generators) {
        // Standard submask walk: s runs over all submasks of g.
        for (std::uint32_t s = g;; s = (s - 1) & g) {
            closed.insert(s);
            if (s == 0)
                break;
        }
    }
    return SetFamily{dim, std::move(ground_set), {closed.begin(), closed.end()}, true};
}

SetFamily enumerate_trees(const OrderedComplex& k, int p, std::size_t cap) {
    check_ground(k.count(p), cap, "trees");
    return independent_family(k, p, linalg::boundary_block(k, p));
}

SetFamily enumerate_cotrees(const OrderedComplex& k, int p, std::size_t cap) {
    check_ground(k.count(p), cap, "cotrees");
    return independent_family(k, p, linalg::coboundary_block(k, p));
}

std::pair<std::vector<Index>, OrderedComplex> arrange_by_dimension(const OrderedComplex& k, int p,
                                                                  const std::vector<Index>& p_order) {
    std::vector<Index> sorted = p_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != k.cells_of_dim(p))
        throw Error(ErrorCode::OrderingMismatch, "not a permutation of the " + std::to_string(p) + "-cells");
    std::vector<Index> order;
    order.reserve(k.size());
    for (int q = -1; q <= k.dim(); ++q) {
        if (q == p) {
            order.insert(order.end(), p_order.begin(), p_order.end());
        } else {
            const auto cells = k.cells_of_dim(q);
            order.insert(order.end(), cells.begin(), cells.end());
        }
    }
    OrderedComplex arranged = reordered(k, order);
    return {std::move(order), std::move(arranged)};
}

SetFamily enumerate_leftovers(const OrderedComplex& k, int p, std::size_t ordering_cap) {
    const std::size_t n = k.count(p);
    check_ground(n, kMaxGround, "leftovers");
    std::size_t orderings = 1;
    for (std::size_t t = 2; t <= n; ++t) {
        orderings *= t;
        if (orderings > ordering_cap)
            throw Error(ErrorCode::CapExceeded, "leftovers: " + std::to_string(n) +
                                                    "! orderings exceed the cap of " + std::to_string(ordering_cap));
    }

    SetFamily shape;
    shape.dim = p;
    shape.ground_set = k.cells_of_dim(p);
    std::vector<Index> perm = shape.ground_set;
    std::set<std::uint32_t> leftovers;
    do {
        const auto [order, arranged] = arrange_by_dimension(k, p, perm);
        const TriPartition tp = tri_partition(arranged);
        std::vector<Index> original;
        for (Index c : tp.at(p).leftover)
            original.push_back(order[c]);
        leftovers.insert(shape.mask_of(original));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SetFamily::downward_closure(p, shape.ground_set, {leftovers.begin(), leftovers.end()});
}

Report check_matroid(const SetFamily& family) {
    Report rep{"matroid p=" + std::to_string(family.dim)};
    const Membership in(family);
    rep.rank = static_cast<long long>(family.rank());
    if (!in(0)) {
        rep.fail("the empty set is not a member");
        return rep;
    }
    for (std::uint32_t m : family.members) {
        for (std::uint32_t rest = m; rest; rest &= rest - 1) {
            const std::uint32_t smaller = m & ~(rest & -rest);
            if (!in(smaller)) {
                rep.fail("not closed under subsets", {family.cells(m), family.cells(smaller)});
                return rep;
            }
        }
    }
    // With subset closure, the exchange property for |F| = |G| + 1 implies
    // it for every larger F.
    std::vector<std::vector<std::uint32_t>> by_size(family.ground_set.size() + 1);
    for (std::uint32_t m : family.members)
        by_size[std::popcount(m)].push_back(m);
    for (std::size_t s = 0; s + 1 < by_size.size(); ++s) {
        for (std::uint32_t g : by_size[s]) {
            for (std::uint32_t f : by_size[s + 1]) {
                bool exchanged = false;
                for (std::uint32_t diff = f & ~g; diff && !exchanged; diff &= diff - 1)
                    exchanged = in(g | (diff & -diff));
                if (!exchanged) {
                    rep.fail("exchange fails: no element of F extends G", {family.cells(f), family.cells(g)});
                    return rep;
                }
            }
        }
    }
    const auto maximal = family.maximal();
    for (std::uint32_t m : maximal) {
        if (static_cast<long long>(std::popcount(m)) != rep.rank) {
            rep.fail("maximal members of different sizes", {family.cells(m), family.cells(maximal.front())});
            return rep;
        }
    }
    rep.detail = std::to_string(family.members.size()) + " members, " + std::to_string(maximal.size()) +
                 " maximal of size " + std::to_string(rep.rank);
    if (family.closed_downward)
        rep.detail += ", closed downward from the generated sets";
    return rep;
}

} // namespace tripart

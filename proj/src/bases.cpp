#include "tripart/bases.hpp"

#include "tripart/error.hpp"
#include "tripart/linalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace tripart {

namespace {

BitVector as_vector(const Chain& c, std::size_t n) { return BitVector::from_indices(n, c.cells); }

std::string describe(const std::vector<Index>& cells) {
    std::ostringstream os;
    os << '{';
    for (std::size_t t = 0; t < cells.size(); ++t)
        os << (t ? " " : "") << external_index(cells[t]);
    os << '}';
    return os.str();
}

std::string cell_name(Index c) { return "cell " + std::to_string(external_index(c)); }

std::string label(const char* what, int p) { return std::string(what) + " p=" + std::to_string(p); }

/// Checks that `e` is of `kind`, contains its own cell, and that every other
/// member has a role in `allowed`.
void check_payload(Report& rep, const CanonicalBasisSet& bs, const BasisElement& e, BasisKind kind,
                   std::initializer_list<Role> allowed) {
    if (e.kind != kind) {
        rep.fail(cell_name(e.cell) + " has kind " + std::string(to_string(e.kind)) + ", expected " +
                     std::string(to_string(kind)),
                 {e.payload});
        return;
    }
    const auto& cells = e.payload.cells;
    if (!std::binary_search(cells.begin(), cells.end(), e.cell)) {
        rep.fail(cell_name(e.cell) + " is missing from its own " + std::string(to_string(kind)), {e.payload});
        return;
    }
    for (Index m : cells) {
        if (m == e.cell)
            continue;
        if (bs.dims[m] != bs.dims[e.cell] ||
            std::find(allowed.begin(), allowed.end(), bs.roles[m]) == allowed.end()) {
            rep.fail(std::string(to_string(kind)) + " of " + cell_name(e.cell) + " contains " + cell_name(m) +
                         " with role " + std::string(to_string(bs.roles[m])),
                     {e.payload});
            return;
        }
    }
}

/// Sum of the payloads of the given cells.
BitVector sum_payloads(const std::vector<BasisElement>& elements, const std::vector<Index>& cells, std::size_t n) {
    BitVector acc(n);
    for (Index c : cells)
        acc ^= as_vector(elements[c].payload, n);
    return acc;
}

/// Independence of the family and agreement of its size with the oracle
/// rank.
void check_rank(Report& rep, const std::vector<BitVector>& family, std::size_t expected) {
    const std::size_t r = linalg::rank(family);
    rep.rank = static_cast<long long>(family.size());
    if (r != family.size())
        rep.fail("family of " + std::to_string(family.size()) + " vectors has rank " + std::to_string(r));
    else if (family.size() != expected)
        rep.fail("family has " + std::to_string(family.size()) + " elements, oracle rank is " +
                 std::to_string(expected));
}

/// Every vector of the independently computed kernel basis must equal the
/// sum of the basis elements of its distinguished cells.
void check_span(Report& rep, const CanonicalBasisSet& bs, const std::vector<BasisElement>& elements,
                const std::vector<BitVector>& block, const std::vector<Index>& p_cells,
                std::initializer_list<Role> distinguished, int p) {
    const std::size_t n = bs.size();
    for (const BitVector& x : linalg::nullspace(block)) {
        std::vector<Index> z;
        for (Index t : x.ones())
            z.push_back(p_cells[t]);
        std::vector<Index> marked;
        for (Index c : z) {
            if (std::find(distinguished.begin(), distinguished.end(), bs.roles[c]) != distinguished.end())
                marked.push_back(c);
        }
        if (sum_payloads(elements, marked, n) != BitVector::from_indices(n, z)) {
            rep.fail("kernel vector " + describe(z) + " is not the sum of the basis elements of " + describe(marked),
                     {Chain{p, z}});
            return;
        }
    }
}

} // namespace

std::string_view to_string(BasisKind kind) {
    switch (kind) {
    case BasisKind::Cycle: return "cycle";
    case BasisKind::Chain: return "chain";
    case BasisKind::Cocycle: return "cocycle";
    case BasisKind::Cochain: return "cochain";
    }
    return "unknown";
}

std::vector<Index> CanonicalBasisSet::cells(int p, std::initializer_list<Role> wanted) const {
    std::vector<Index> out;
    for (Index c = 0; c < dims.size(); ++c) {
        if (dims[c] == p && std::find(wanted.begin(), wanted.end(), roles[c]) != wanted.end())
            out.push_back(c);
    }
    return out;
}

CanonicalBasisSet extract_bases(const ColumnReduction& cr, const RowReduction& rr, const TriPartition& tp) {
    const std::size_t n = tp.role.size();
    if (cr.U.size() != n || rr.V.size() != n)
        throw Error(ErrorCode::InconsistentInputs, "reductions and tri-partition have different cell counts");
    CanonicalBasisSet bs;
    bs.roles = tp.role;
    bs.dims.assign(n, -2);
    for (int p = tp.parts.min_dim(); p <= tp.parts.max_dim(); ++p) {
        const DimPartition& part = tp.parts[p];
        for (const auto* set : {&part.tree, &part.cotree, &part.leftover}) {
            for (Index c : *set)
                bs.dims.at(c) = p;
        }
    }
    if (std::find(bs.dims.begin(), bs.dims.end(), -2) != bs.dims.end())
        throw Error(ErrorCode::InconsistentInputs, "tri-partition does not cover every cell");

    for (Index c = 0; c < n; ++c) {
        const int p = bs.dims[c];
        bs.homology.push_back(BasisElement{c, bs.roles[c] == Role::Tree ? BasisKind::Chain : BasisKind::Cycle,
                                           Chain{p, cr.U.column_ones(c)}});
        bs.cohomology.push_back(BasisElement{
            c, bs.roles[c] == Role::Cotree ? BasisKind::Cochain : BasisKind::Cocycle, Chain{p, rr.V.row_ones(c)}});
    }
    return bs;
}

Report verify_cycle_basis(const CanonicalBasisSet& bs, const OrderedComplex& k, int p) {
    Report rep{label("cycle basis", p)};
    const std::size_t n = k.size();
    const Gf2Matrix d = boundary_matrix(k);
    std::vector<BitVector> family;
    for (Index c : bs.cells(p, {Role::Cotree, Role::Leftover})) {
        const BasisElement& e = bs.homology[c];
        check_payload(rep, bs, e, BasisKind::Cycle, {Role::Tree});
        if (!boundary_of(d, e.payload).cells.empty())
            rep.fail("canonical cycle of " + cell_name(c) + " has non-empty boundary", {e.payload});
        family.push_back(as_vector(e.payload, n));
    }
    const auto block = linalg::boundary_block(k, p);
    check_rank(rep, family, block.size() - linalg::rank(block));
    check_span(rep, bs, bs.homology, block, k.cells_of_dim(p), {Role::Cotree, Role::Leftover}, p);
    return rep;
}

Report verify_boundary_basis(const CanonicalBasisSet& bs, const OrderedComplex& k, int p) {
    Report rep{label("boundary basis", p)};
    const std::size_t n = k.size();
    const Gf2Matrix d = boundary_matrix(k);
    std::vector<BitVector> family;
    for (Index c : bs.cells(p, {Role::Tree})) {
        const BasisElement& e = bs.homology[c];
        check_payload(rep, bs, e, BasisKind::Chain, {Role::Tree});
        const Chain b = boundary_of(d, e.payload);
        std::vector<Index> births;
        for (Index m : b.cells) {
            if (bs.roles[m] != Role::Tree)
                births.push_back(m);
        }
        if (sum_payloads(bs.homology, births, n) != as_vector(b, n))
            rep.fail("boundary of the canonical chain of " + cell_name(c) +
                         " is not the sum of the canonical cycles of " + describe(births),
                     {e.payload, b});
        family.push_back(as_vector(b, n));
    }
    check_rank(rep, family, linalg::boundary_rank(k, p));
    return rep;
}

Report verify_homology_generators(const CanonicalBasisSet& bs, const OrderedComplex& k, int p) {
    Report rep{label("homology generators", p)};
    const std::size_t n = k.size();
    const Gf2Matrix d = boundary_matrix(k);
    std::vector<BitVector> generators;
    for (Index c : bs.cells(p, {Role::Leftover})) {
        const BasisElement& e = bs.homology[c];
        check_payload(rep, bs, e, BasisKind::Cycle, {Role::Tree});
        if (!boundary_of(d, e.payload).cells.empty())
            rep.fail("generator of " + cell_name(c) + " is not a cycle", {e.payload});
        generators.push_back(as_vector(e.payload, n));
    }
    const auto cycles = linalg::boundary_block(k, p);
    const auto boundaries = linalg::boundary_block(k, p + 1);
    const std::size_t rank_b = linalg::rank(boundaries);
    const std::size_t betti = cycles.size() - linalg::rank(cycles) - rank_b;
    rep.rank = static_cast<long long>(generators.size());
    if (generators.size() != betti)
        rep.fail(std::to_string(generators.size()) + " generators, oracle Betti number is " + std::to_string(betti));
    auto joint = boundaries;
    joint.insert(joint.end(), generators.begin(), generators.end());
    const std::size_t rank_joint = linalg::rank(joint);
    if (rank_joint != rank_b + generators.size())
        rep.fail("generators are dependent modulo boundaries: rank " + std::to_string(rank_joint) + " instead of " +
                 std::to_string(rank_b + generators.size()));
    return rep;
}

Report verify_cocycle_basis(const CanonicalBasisSet& bs, const OrderedComplex& k, int p) {
    Report rep{label("cocycle basis", p)};
    const std::size_t n = k.size();
    const Gf2Matrix d = boundary_matrix(k);
    std::vector<BitVector> family;
    for (Index c : bs.cells(p, {Role::Tree, Role::Leftover})) {
        const BasisElement& e = bs.cohomology[c];
        check_payload(rep, bs, e, BasisKind::Cocycle, {Role::Cotree});
        if (!coboundary_of(d, e.payload).cells.empty())
            rep.fail("canonical cocycle of " + cell_name(c) + " has non-empty coboundary", {e.payload});
        family.push_back(as_vector(e.payload, n));
    }
    const auto block = linalg::coboundary_block(k, p);
    check_rank(rep, family, block.size() - linalg::rank(block));
    check_span(rep, bs, bs.cohomology, block, k.cells_of_dim(p), {Role::Tree, Role::Leftover}, p);
    return rep;
}

Report verify_cohomology_generators(const CanonicalBasisSet& bs, const OrderedComplex& k, int p) {
    Report rep{label("cohomology generators", p)};
    const std::size_t n = k.size();
    const Gf2Matrix d = boundary_matrix(k);
    std::vector<BitVector> generators;
    for (Index c : bs.cells(p, {Role::Leftover})) {
        const BasisElement& e = bs.cohomology[c];
        check_payload(rep, bs, e, BasisKind::Cocycle, {Role::Cotree});
        if (!coboundary_of(d, e.payload).cells.empty())
            rep.fail("generator of " + cell_name(c) + " is not a cocycle", {e.payload});
        generators.push_back(as_vector(e.payload, n));
    }
    const auto cocycles = linalg::coboundary_block(k, p);
    const auto coboundaries = linalg::coboundary_block(k, p - 1);
    const std::size_t rank_b = linalg::rank(coboundaries);
    const std::size_t betti = cocycles.size() - linalg::rank(cocycles) - rank_b;
    rep.rank = static_cast<long long>(generators.size());
    if (generators.size() != betti)
        rep.fail(std::to_string(generators.size()) + " generators, oracle cohomology rank is " +
                 std::to_string(betti));
    auto joint = coboundaries;
    joint.insert(joint.end(), generators.begin(), generators.end());
    const std::size_t rank_joint = linalg::rank(joint);
    if (rank_joint != rank_b + generators.size())
        rep.fail("generators are dependent modulo coboundaries: rank " + std::to_string(rank_joint) +
                 " instead of " + std::to_string(rank_b + generators.size()));
    return rep;
}

Report verify_coboundary_basis(const CanonicalBasisSet& bs, const OrderedComplex& k, int p) {
    Report rep{label("coboundary basis", p)};
    const std::size_t n = k.size();
    const Gf2Matrix d = boundary_matrix(k);
    std::vector<BitVector> family;
    for (Index c : bs.cells(p, {Role::Cotree})) {
        const BasisElement& e = bs.cohomology[c];
        check_payload(rep, bs, e, BasisKind::Cochain, {Role::Cotree});
        const Chain b = coboundary_of(d, e.payload);
        std::vector<Index> births;
        for (Index m : b.cells) {
            if (bs.roles[m] != Role::Cotree)
                births.push_back(m);
        }
        if (sum_payloads(bs.cohomology, births, n) != as_vector(b, n))
            rep.fail("coboundary of the canonical cochain of " + cell_name(c) +
                         " is not the sum of the canonical cocycles of " + describe(births),
                     {e.payload, b});
        family.push_back(as_vector(b, n));
    }
    check_rank(rep, family, linalg::rank(linalg::coboundary_block(k, p)));
    return rep;
}

std::vector<Report> verify_cobases(const CanonicalBasisSet& bs, const OrderedComplex& k, int p) {
    return {verify_cocycle_basis(bs, k, p), verify_cohomology_generators(bs, k, p),
            verify_coboundary_basis(bs, k, p)};
}

namespace {

/// For every target cell, counts the subsets S of `basis_cells` with
/// sum(S) = vector(target), and records the last matching subset.
struct CompletionCount {
    std::size_t matches = 0;
    std::vector<Index> subset;
};

std::vector<CompletionCount> enumerate_completions(const std::vector<BitVector>& basis,
                                                   const std::vector<Index>& basis_cells,
                                                   const std::vector<BitVector>& targets) {
    std::unordered_multimap<BitVector, std::size_t, BitVectorHash> lookup;
    for (std::size_t t = 0; t < targets.size(); ++t)
        lookup.emplace(targets[t], t);
    std::vector<CompletionCount> counts(targets.size());
    if (targets.empty())
        return counts;
    const std::size_t width = targets.front().size();
    BitVector current(width);
    std::uint32_t mask = 0;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    // Gray-code walk: step s toggles the lowest set bit of s.
    for (std::uint64_t s = 0; s < total; ++s) {
        if (s > 0) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(s));
            current ^= basis[bit];
            mask ^= std::uint32_t{1} << bit;
        }
        auto [lo, hi] = lookup.equal_range(current);
        for (auto it = lo; it != hi; ++it) {
            CompletionCount& c = counts[it->second];
            ++c.matches;
            c.subset.clear();
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (mask & (std::uint32_t{1} << b))
                    c.subset.push_back(basis_cells[b]);
            }
        }
    }
    return counts;
}

void check_unique_completions(Report& rep, const CanonicalBasisSet& bs, const std::vector<BasisElement>& elements,
                              const std::vector<BitVector>& vectors_of, const std::vector<Index>& basis_cells,
                              const std::vector<Index>& targets, const char* what, int p) {
    std::vector<BitVector> basis;
    for (Index c : basis_cells)
        basis.push_back(vectors_of[c]);
    std::vector<BitVector> target_vectors;
    for (Index c : targets)
        target_vectors.push_back(vectors_of[c]);
    const auto counts = enumerate_completions(basis, basis_cells, target_vectors);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Index c = targets[t];
        if (counts[t].matches != 1) {
            rep.fail(std::to_string(counts[t].matches) + " " + what + "s through " + cell_name(c) +
                         " instead of exactly one",
                     {elements[c].payload});
            return;
        }
        std::vector<Index> found = counts[t].subset;
        found.push_back(c);
        std::sort(found.begin(), found.end());
        if (found != elements[c].payload.cells) {
            rep.fail("enumerated " + std::string(what) + " of " + cell_name(c) + " differs from the stored one",
                     {Chain{p, found}, elements[c].payload});
            return;
        }
    }
    (void)bs;
}

} // namespace

Report verify_canonical_uniqueness(const CanonicalBasisSet& bs, const OrderedComplex& k, int p, std::size_t cap) {
    Report rep{label("canonical uniqueness", p)};
    const std::vector<Index> tree = bs.cells(p, {Role::Tree});
    const std::vector<Index> cotree = bs.cells(p, {Role::Cotree});
    if (tree.size() > cap || cotree.size() > cap) {
        rep.skipped = true;
        rep.detail = "tree or cotree exceeds " + std::to_string(cap) + " cells";
        return rep;
    }
    // Vectors by cell: boundaries for the homology side, coboundaries for
    // the cohomology side.
    const std::size_t n = k.size();
    std::vector<BitVector> boundary(n), coboundary(n);
    const auto b = linalg::boundary_block(k, p);
    const auto cb = linalg::coboundary_block(k, p);
    const auto p_cells = k.cells_of_dim(p);
    for (std::size_t t = 0; t < p_cells.size(); ++t) {
        boundary[p_cells[t]] = b[t];
        coboundary[p_cells[t]] = cb[t];
    }
    check_unique_completions(rep, bs, bs.homology, boundary, tree, bs.cells(p, {Role::Cotree, Role::Leftover}),
                             "cycle", p);
    check_unique_completions(rep, bs, bs.cohomology, coboundary, cotree, bs.cells(p, {Role::Tree, Role::Leftover}),
                             "cocycle", p);
    return rep;
}

Report verify_off_diagonal_support(const ColumnReduction& cr, const RowReduction& rr, const TriPartition& tp) {
    Report rep{"off-diagonal support"};
    const std::size_t n = tp.role.size();
    if (cr.U.size() != n || rr.V.size() != n)
        throw Error(ErrorCode::InconsistentInputs, "reductions and tri-partition have different cell counts");
    std::vector<int> dims(n, -2);
    for (int p = tp.parts.min_dim(); p <= tp.parts.max_dim(); ++p) {
        for (const auto* set : {&tp.parts[p].tree, &tp.parts[p].cotree, &tp.parts[p].leftover}) {
            for (Index c : *set)
                dims[c] = p;
        }
    }
    for (Index j = 0; j < n; ++j) {
        for (Index i : cr.U.column_ones(j)) {
            if (i != j && (tp.role[i] != Role::Tree || dims[i] != dims[j]))
                rep.fail("U[" + std::to_string(i) + "," + std::to_string(j) + "] = 1 outside a tree row",
                         {Chain{dims[j], {i, j}}});
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j : rr.V.row_ones(i)) {
            if (i != j && (tp.role[j] != Role::Cotree || dims[i] != dims[j]))
                rep.fail("V[" + std::to_string(i) + "," + std::to_string(j) + "] = 1 outside a cotree column",
                         {Chain{dims[i], {i, j}}});
        }
    }
    return rep;
}

Report verify_two_crossings(const CanonicalBasisSet& bs, int p) {
    Report rep{label("two crossings", p)};
    const std::size_t n = bs.size();
    std::size_t crossings = 0;
    for (Index b : bs.cells(p, {Role::Cotree})) {
        const BitVector cycle = as_vector(bs.homology[b].payload, n);
        for (Index a : bs.cells(p, {Role::Tree})) {
            const auto& cocycle = bs.cohomology[a].payload.cells;
            const bool a_on_cycle = cycle.test(a);
            const bool b_on_cocycle = std::binary_search(cocycle.begin(), cocycle.end(), b);
            if (a_on_cycle != b_on_cocycle)
                rep.fail(cell_name(a) + (a_on_cycle ? " lies" : " does not lie") + " on the cycle of " +
                             cell_name(b) + " but the converse " + (b_on_cocycle ? "holds" : "fails"),
                         {bs.homology[b].payload, bs.cohomology[a].payload});
            crossings += a_on_cycle ? 1 : 0;
        }
    }
    rep.rank = static_cast<long long>(crossings);
    return rep;
}

Report verify_chain_decomposition(const CanonicalBasisSet& bs, const OrderedComplex& k, int p) {
    Report rep{label("chain decomposition", p)};
    const std::size_t n = k.size();
    std::vector<BitVector> all;
    for (Index c : k.cells_of_dim(p))
        all.push_back(as_vector(bs.homology[c].payload, n));
    const std::size_t total = bs.cells(p, {Role::Tree}).size() + bs.cells(p, {Role::Cotree}).size() +
                              bs.cells(p, {Role::Leftover}).size();
    rep.rank = static_cast<long long>(linalg::rank(all));
    if (total != k.count(p))
        rep.fail("partition sizes sum to " + std::to_string(total) + ", n_p = " + std::to_string(k.count(p)));
    if (static_cast<std::size_t>(rep.rank) != k.count(p))
        rep.fail("chains and cycles span a space of rank " + std::to_string(rep.rank) + " < n_p = " +
                 std::to_string(k.count(p)));
    return rep;
}

IntMatrix intersection_matrix(const ColumnReduction& cr, const RowReduction& rr) { return int_product(rr.V, cr.U); }

Report verify_intersection_patterns(const IntMatrix& vu, const CanonicalBasisSet& bs) {
    Report rep{"intersection patterns"};
    const std::size_t n = bs.size();
    if (vu.size() != n)
        throw Error(ErrorCode::InconsistentInputs, "intersection matrix size differs from the basis set");
    std::vector<BitVector> cycle_of, cocycle_of;
    for (Index c = 0; c < n; ++c) {
        cycle_of.push_back(as_vector(bs.homology[c].payload, n));
        cocycle_of.push_back(as_vector(bs.cohomology[c].payload, n));
    }
    long long twos = 0;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const Role ri = bs.roles[i];
            const Role rj = bs.roles[j];
            long long expected = 0;
            if (i == j) {
                expected = 1;
            } else if (bs.dims[i] == bs.dims[j]) {
                if (ri == Role::Tree && rj == Role::Cotree) {
                    expected = cycle_of[j].test(i) ? 2 : 0;
                } else if (ri == Role::Tree && rj != Role::Cotree) {
                    expected = cycle_of[j].test(i) ? 1 : 0;
                } else if (ri != Role::Tree && rj == Role::Cotree) {
                    expected = cocycle_of[i].test(j) ? 1 : 0;
                }
            }
            const long long actual = vu(i, j);
            if (actual < 0 || actual > 2)
                rep.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(actual) +
                             " outside {0,1,2}",
                         {Chain{bs.dims[i], {i}}, Chain{bs.dims[j], {j}}});
            if (actual != expected)
                rep.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(actual) +
                             ", expected " + std::to_string(expected),
                         {Chain{bs.dims[i], {i}}, Chain{bs.dims[j], {j}}});
            if (ri == Role::Leftover && rj == Role::Leftover && actual != (i == j ? 1 : 0))
                rep.fail("leftover block is not the identity at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                         {Chain{bs.dims[i], {i}}, Chain{bs.dims[j], {j}}});
            twos += actual == 2 ? 1 : 0;
        }
    }
    rep.rank = twos;
    return rep;
}

Report verify_intersection_copy_rule(const IntMatrix& vu, const ColumnReduction& cr, const RowReduction& rr,
                                     const CanonicalBasisSet& bs) {
    Report rep{"intersection copy rule"};
    const std::size_t n = bs.size();
    if (vu.size() != n || cr.U.size() != n || rr.V.size() != n)
        throw Error(ErrorCode::InconsistentInputs, "matrix sizes differ from the basis set");
    long long singles = 0;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const long long actual = vu(i, j);
            long long expected = 1;
            if (i != j) {
                expected = (cr.U.get(i, j) ? 1 : 0) + (rr.V.get(i, j) ? 1 : 0);
                if (bs.dims[i] != bs.dims[j] && expected != 0)
                    rep.fail("U or V links cells of different dimensions at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
                if (i > j && expected != 0)
                    rep.fail("entry below the diagonal at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (i != j && bs.roles[i] == Role::Leftover && bs.roles[j] == Role::Leftover && actual != 0)
                rep.fail("leftover block is not the identity at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                         {Chain{bs.dims[i], {i}}, Chain{bs.dims[j], {j}}});
            if (actual != expected || actual < 0 || actual > 2)
                rep.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(actual) +
                             ", copy rule gives " + std::to_string(expected),
                         {Chain{bs.dims[i], {i}}, Chain{bs.dims[j], {j}}});
            if (i != j && bs.roles[i] == Role::Tree && bs.roles[j] == Role::Cotree && actual == 1)
                ++singles;
        }
    }
    rep.rank = singles;
    if (rep.pass)
        rep.detail = std::to_string(singles) + " tree/cotree pairs cross once";
    return rep;
}

} // namespace tripart

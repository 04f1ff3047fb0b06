#include "tripart/check/suites.hpp"

#include "tripart/bases.hpp"
#include "tripart/check/generators.hpp"
#include "tripart/check/oracles.hpp"
#include "tripart/check/samples.hpp"
#include "tripart/error.hpp"
#include "tripart/linalg.hpp"
#include "tripart/matroid.hpp"
#include "tripart/reduction.hpp"
#include "tripart/tripartition.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <type_traits>

namespace tripart::check {

namespace {

std::string idx(Index i) { return std::to_string(i); }

std::string dims_text(int p) { return " (p=" + std::to_string(p) + ")"; }

bool unit_upper(const Gf2Matrix& m) {
    if (!m.is_upper_triangular())
        return false;
    for (Index i = 0; i < m.size(); ++i) {
        if (!m.get(i, i))
            return false;
    }
    return true;
}

std::vector<Index> map_back(const std::vector<Index>& cells, const std::vector<Index>& order) {
    std::vector<Index> out;
    for (Index c : cells)
        out.push_back(order[c]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string set_text(const std::vector<Index>& cells) {
    std::string s = "{";
    for (std::size_t t = 0; t < cells.size(); ++t)
        s += (t ? " " : "") + std::to_string(external_index(cells[t]));
    return s + "}";
}

} // namespace

std::string_view to_string(Suite suite) {
    switch (suite) {
    case Suite::Gf2: return "gf2";
    case Suite::Complex: return "complex";
    case Suite::Reduction: return "reduction";
    case Suite::Tripartition: return "tripartition";
    case Suite::Bases: return "bases";
    case Suite::Matroid: return "matroid";
    }
    return "unknown";
}

std::vector<Report> check_matrix_kernels(std::size_t n, Rng& rng) {
    const Gf2Matrix a = random_matrix(n, rng);
    const Gf2Matrix b = random_matrix(n, rng);

    Report inv("add involutions");
    if (n >= 2) {
        const Index src = rng.below(n);
        Index dst = rng.below(n - 1);
        dst += dst >= src ? 1 : 0;
        Gf2Matrix m = a;
        m.col_add(src, dst);
        for (Index i = 0; i < n; ++i) {
            if (m.get(i, dst) != (a.get(i, dst) != a.get(i, src)))
                inv.fail("column add did not XOR entry " + idx(i));
        }
        m.col_add(src, dst);
        if (m != a)
            inv.fail("column add twice did not restore the matrix");
        m.row_add(src, dst);
        for (Index j = 0; j < n; ++j) {
            if (m.get(dst, j) != (a.get(dst, j) != a.get(src, j)))
                inv.fail("row add did not XOR entry " + idx(j));
            if (m.get(src, j) != a.get(src, j))
                inv.fail("row add changed the source row");
        }
        m.row_add(src, dst);
        if (m != a)
            inv.fail("row add twice did not restore the matrix");
    }

    Report scans("low and left");
    for (Index t = 0; t < n; ++t) {
        if (a.low(t) != naive_low(a, t))
            scans.fail("low of column " + idx(t) + " differs from a scan");
        if (a.left(t) != naive_left(a, t))
            scans.fail("left of row " + idx(t) + " differs from a scan");
    }

    Report products("products");
    if (int_product(a, b) != naive_int_product(a, b))
        products.fail("integer product differs from the triple loop");
    if (multiply(a, b) != naive_product(a, b))
        products.fail("Z/2 product differs from the triple loop");
    const Gf2Matrix t = a.transpose();
    const Gf2Matrix r = a.anti_transpose();
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (t.get(i, j) != a.get(j, i) || r.get(i, j) != a.get(n - 1 - j, n - 1 - i))
                products.fail("transpose mismatch at (" + idx(i) + "," + idx(j) + ")");
        }
    }
    return {inv, scans, products};
}

Report check_structure(const OrderedComplex& k) {
    Report rep("complex structure");
    const Gf2Matrix d = boundary_matrix(k);
    if (!d.is_upper_triangular())
        rep.fail("boundary matrix is not upper-triangular");
    for (Index i = 0; i < k.size(); ++i) {
        if (d.get(i, i))
            rep.fail("non-zero diagonal entry " + idx(i));
    }
    if (naive_product(d, d).count_nonzero() != 0)
        rep.fail("boundary of boundary is not zero");
    if (from_boundary_format(to_boundary_format(k)) != k)
        rep.fail("boundary format round trip changed the complex");
    for (Index ell = 0; ell < k.size(); ++ell) {
        const OrderedComplex pre = prefix(k, ell);
        if (pre.size() != ell + 1)
            rep.fail("prefix " + idx(ell) + " has the wrong size");
    }
    return rep;
}

Report check_simplicial_idempotence(std::string_view simplicial_text) {
    Report rep("simplicial completion idempotence");
    if (from_simplicial_format(simplicial_text, true) != from_simplicial_format(simplicial_text, false))
        rep.fail("completion changed a complete simplex list");
    return rep;
}

Report check_euler(const OrderedComplex& k) {
    Report rep("Euler-Poincare");
    const auto betti = betti_numbers(k);
    long long sum = 0;
    for (int p = -1; p <= k.dim(); ++p)
        sum += (p % 2 == 0 ? 1 : -1) * betti[p];
    rep.rank = reduced_euler_characteristic(k);
    if (sum != rep.rank)
        rep.fail("reduced Euler characteristic " + std::to_string(rep.rank) + " but alternating Betti sum " +
                 std::to_string(sum));
    return rep;
}

Report check_reductions(const OrderedComplex& k) {
    Report rep("reduction invariants");
    const Gf2Matrix d = boundary_matrix(k);
    const Reductions r = reduce(k);
    const ColumnReduction& cr = r.column;
    const RowReduction& rr = r.row;
    const std::size_t n = k.size();

    if (naive_product(d, cr.U) != cr.R)
        rep.fail("R differs from boundary * U");
    if (naive_product(rr.V, d) != rr.Q)
        rep.fail("Q differs from V * boundary");
    if (!unit_upper(cr.U))
        rep.fail("U is not unit upper-triangular");
    if (!unit_upper(rr.V))
        rep.fail("V is not unit upper-triangular");

    std::vector<bool> seen_low(n, false), seen_left(n, false);
    for (Index j = 0; j < n; ++j) {
        if (cr.low[j] != naive_low(cr.R, j))
            rep.fail("stored Low of column " + idx(j) + " is stale");
        if (rr.left[j] != naive_left(rr.Q, j))
            rep.fail("stored Left of row " + idx(j) + " is stale");
        if (cr.low[j]) {
            if (seen_low[*cr.low[j]])
                rep.fail("two columns share Low " + idx(*cr.low[j]));
            seen_low[*cr.low[j]] = true;
        }
        if (rr.left[j]) {
            if (seen_left[*rr.left[j]])
                rep.fail("two rows share Left " + idx(*rr.left[j]));
            seen_left[*rr.left[j]] = true;
        }
    }
    // Exhaustiveness: no step of either while loop applies any more.
    for (Index j = 0; j < n; ++j) {
        for (Index l = 0; l < j; ++l) {
            if (cr.low[l] && cr.R.get(*cr.low[l], j))
                rep.fail("column " + idx(j) + " can still be reduced by column " + idx(l));
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index l = i + 1; l < n; ++l) {
            if (rr.left[l] && rr.Q.get(i, *rr.left[l]))
                rep.fail("row " + idx(i) + " can still be reduced by row " + idx(l));
        }
    }
    if (cr.pairs != standard_pairs(d))
        rep.fail("pairs differ from the standard reduction");

    const BirthDeathTable t = classify(cr, rr, k);
    for (int p = -1; p <= k.dim(); ++p) {
        if (t.births[p] + t.deaths[p] != k.count(p) || t.cobirths[p] + t.codeaths[p] != k.count(p))
            rep.fail("births and deaths do not add up to n_p" + dims_text(p));
    }
    return rep;
}

Report check_duality(const OrderedComplex& k) {
    Report rep("duality");
    const Reductions r = reduce(k);
    const BirthDeathTable t = classify(r.column, r.row, k);
    const auto betti = betti_numbers(t);
    const auto cobetti = relative_cohomology_ranks(t);
    for (int p = -1; p <= k.dim(); ++p) {
        if (betti[p] != cobetti[p])
            rep.fail("Betti number " + std::to_string(betti[p]) + " but cohomology rank " +
                     std::to_string(cobetti[p]) + dims_text(p));
    }
    std::vector<IndexPair> column_pairs = r.column.pairs;
    std::sort(column_pairs.begin(), column_pairs.end());
    if (column_pairs != r.row.pairs)
        rep.fail("Low-pairs of R differ from Left-pairs of Q");
    rep.rank = static_cast<long long>(column_pairs.size());
    return rep;
}

Report check_rank_oracle(const OrderedComplex& k) {
    Report rep("rank oracle");
    const auto betti = betti_numbers(k);
    const auto oracle = rank_betti(k);
    for (int p = -1; p <= k.dim(); ++p) {
        if (betti[p] != oracle[p])
            rep.fail("reduction gives " + std::to_string(betti[p]) + ", rank formula gives " +
                     std::to_string(oracle[p]) + dims_text(p));
    }
    return rep;
}

Report check_uniqueness(const OrderedComplex& k, std::size_t orders, Rng& rng) {
    Report rep("reduction uniqueness");
    const Gf2Matrix d = boundary_matrix(k);
    const ColumnReduction cr = exhaustive_column_reduce(d);
    const RowReduction rr = exhaustive_row_reduce(d);
    const CandidatePicker pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng.below(n)); };
    for (std::size_t t = 0; t < orders; ++t) {
        const ColumnReduction c2 = exhaustive_column_reduce(d, pick);
        const RowReduction r2 = exhaustive_row_reduce(d, pick);
        if (c2.R != cr.R || c2.U != cr.U)
            rep.fail("randomized order " + std::to_string(t) + " changed R or U");
        if (r2.Q != rr.Q || r2.V != rr.V)
            rep.fail("randomized order " + std::to_string(t) + " changed Q or V");
    }
    rep.rank = static_cast<long long>(orders);
    return rep;
}

Report check_order_invariance(const OrderedComplex& k, Rng& rng) {
    Report rep("order invariance");
    const OrderedComplex other = reordered(k, random_monotonic_order(k, rng));
    const Reductions a = reduce(k);
    const Reductions b = reduce(other);
    const BirthDeathTable ta = classify(a.column, a.row, k);
    const BirthDeathTable tb = classify(b.column, b.row, other);
    if (ta.births != tb.births || ta.deaths != tb.deaths || ta.cobirths != tb.cobirths ||
        ta.codeaths != tb.codeaths)
        rep.fail("birth/death counts depend on the ordering");
    if (betti_numbers(ta) != betti_numbers(tb))
        rep.fail("Betti numbers depend on the ordering");
    return rep;
}

Report check_tripartition(const OrderedComplex& k) {
    Report rep("tri-partition");
    const Reductions r = reduce(k);
    const TriPartition tp = tri_partition(r, k);
    const BirthDeathTable t = classify(r.column, r.row, k);
    const auto betti = betti_numbers(t);
    const std::size_t n = k.size();

    for (int p = -1; p <= k.dim(); ++p) {
        const DimPartition part = tp.at(p);
        std::vector<Index> all = part.tree;
        all.insert(all.end(), part.cotree.begin(), part.cotree.end());
        all.insert(all.end(), part.leftover.begin(), part.leftover.end());
        std::sort(all.begin(), all.end());
        if (all != k.cells_of_dim(p))
            rep.fail("sets do not partition the p-cells" + dims_text(p));
        if (part.tree.size() != t.deaths[p] || part.cotree.size() != t.codeaths[p] ||
            static_cast<long long>(part.leftover.size()) != betti[p])
            rep.fail("set sizes differ from death counts and Betti number" + dims_text(p));

        // Tree: independent boundaries, as many as rank d_p. Cotree: the
        // same for coboundaries and rank d_{p+1}.
        std::vector<BitVector> tree_vectors, cotree_vectors;
        for (Index c : part.tree)
            tree_vectors.push_back(BitVector::from_indices(n, k.cell(c).faces));
        const auto cob = linalg::coboundary_block(k, p);
        const auto p_cells = k.cells_of_dim(p);
        for (Index c : part.cotree) {
            const auto at = std::lower_bound(p_cells.begin(), p_cells.end(), c) - p_cells.begin();
            cotree_vectors.push_back(cob[at]);
        }
        if (linalg::rank(tree_vectors) != part.tree.size())
            rep.fail("tree contains a cycle" + dims_text(p), {Chain{p, part.tree}});
        if (part.tree.size() != linalg::boundary_rank(k, p))
            rep.fail("tree is not maximal" + dims_text(p), {Chain{p, part.tree}});
        if (linalg::rank(cotree_vectors) != part.cotree.size())
            rep.fail("cotree contains a cocycle" + dims_text(p), {Chain{p, part.cotree}});
        if (part.cotree.size() != linalg::rank(cob))
            rep.fail("cotree is not maximal" + dims_text(p), {Chain{p, part.cotree}});
    }

    const PersistenceDiagram diag = persistence_diagram(r.column, k);
    std::vector<IndexPair> finite;
    for (const DiagramPoint& pt : diag.finite) {
        if (!pt.death) {
            rep.fail("finite point without death");
            continue;
        }
        finite.emplace_back(pt.birth, *pt.death);
        if (pt.dim != k.dim(pt.birth) || tp.role[pt.birth] != Role::Cotree || tp.role[*pt.death] != Role::Tree ||
            k.dim(*pt.death) != pt.dim + 1)
            rep.fail("finite point (" + idx(pt.birth) + "," + idx(*pt.death) + ") disagrees with the tri-partition");
        if (r.column.R.column_ones(pt.birth).size() != 0)
            rep.fail("finite point born at a non-zero column " + idx(pt.birth));
    }
    std::vector<IndexPair> expected = r.column.pairs;
    std::sort(expected.begin(), expected.end());
    if (finite != expected)
        rep.fail("finite points differ from the Low-pairs");
    DimVector<long long> essential(k.dim(), 0);
    for (const DiagramPoint& pt : diag.essential) {
        if (pt.death || tp.role[pt.birth] != Role::Leftover)
            rep.fail("essential point at " + idx(pt.birth) + " is not a leftover cell");
        ++essential[pt.dim];
    }
    if (essential != betti)
        rep.fail("essential points per dimension differ from the Betti numbers");
    return rep;
}

Report check_dimension_stability(const OrderedComplex& k, Rng& rng) {
    Report rep("dimension stability");
    const TriPartition base = tri_partition(k);
    for (int p = -1; p <= k.dim(); ++p) {
        const std::vector<Index> order = random_order_fixing_dim(k, p, rng);
        const TriPartition moved = tri_partition(reordered(k, order));
        const DimPartition a = base.at(p);
        const DimPartition b = moved.at(p);
        if (map_back(b.tree, order) != a.tree || map_back(b.cotree, order) != a.cotree ||
            map_back(b.leftover, order) != a.leftover)
            rep.fail("re-ordering other dimensions changed the partition" + dims_text(p));
    }
    return rep;
}

Report check_incremental(const OrderedComplex& k) {
    Report rep("incremental construction");
    IncrementalTriPartition inc;
    for (Index ell = 0; ell < k.size(); ++ell) {
        if (ell > 0)
            inc.add(k.cell(ell));
        if (inc.partition() != tri_partition(prefix(k, ell))) {
            rep.fail("incremental state differs from the batch tri-partition after cell " + idx(ell));
            break;
        }
    }
    rep.rank = static_cast<long long>(k.size());
    return rep;
}

Report check_prefix_betti(const OrderedComplex& k) {
    Report rep("prefix Betti numbers");
    const PersistenceDiagram diag = persistence_diagram(k);
    for (Index ell = 0; ell < k.size(); ++ell) {
        const auto direct = betti_numbers(prefix(k, ell));
        for (int p = -1; p <= k.dim(); ++p) {
            const long long q = betti_of_prefix(diag, ell, p);
            if (q != direct.value_or(p, 0))
                rep.fail("prefix " + idx(ell) + ": diagram gives " + std::to_string(q) + ", reduction gives " +
                         std::to_string(direct.value_or(p, 0)) + dims_text(p));
        }
    }
    return rep;
}

Report check_relative_cohomology(const OrderedComplex& k) {
    Report rep("relative cohomology query");
    const PersistenceDiagram diag = persistence_diagram(k);
    const auto totals = relative_cohomology_ranks(k);
    for (int p = -1; p <= k.dim(); ++p) {
        if (relative_cohomology_rank(diag, 0, p) != totals[p])
            rep.fail("query with empty L differs from the cohomology rank" + dims_text(p));
    }
    for (std::size_t s = 0; s <= k.size(); ++s) {
        for (int p = -1; p <= k.dim() + 1; ++p) {
            const long long q = relative_cohomology_rank(diag, s, p);
            const long long oracle = relative_rank(k, s, p);
            if (q != oracle)
                rep.fail("L of size " + std::to_string(s) + ": query gives " + std::to_string(q) +
                         ", relative complex gives " + std::to_string(oracle) + dims_text(p));
        }
    }
    return rep;
}

std::vector<Report> check_bases(const OrderedComplex& k, std::size_t cap) {
    const Reductions r = reduce(k);
    const TriPartition tp = tri_partition(r, k);
    const CanonicalBasisSet bs = extract_bases(r.column, r.row, tp);
    const auto cobetti = relative_cohomology_ranks(classify(r.column, r.row, k));
    std::vector<Report> out;
    for (int p = -1; p <= k.dim() + 1; ++p) {
        out.push_back(verify_cycle_basis(bs, k, p));
        out.push_back(verify_boundary_basis(bs, k, p));
        out.push_back(verify_homology_generators(bs, k, p));
        for (Report& rep : verify_cobases(bs, k, p)) {
            if (rep.name.rfind("cohomology generators", 0) == 0 && rep.rank != cobetti.value_or(p, 0))
                rep.fail("generator count differs from the cohomology rank " +
                         std::to_string(cobetti.value_or(p, 0)));
            out.push_back(std::move(rep));
        }
        out.push_back(verify_canonical_uniqueness(bs, k, p, cap));
        out.push_back(verify_two_crossings(bs, p));
        out.push_back(verify_chain_decomposition(bs, k, p));
    }
    out.push_back(verify_off_diagonal_support(r.column, r.row, tp));
    return out;
}

std::vector<Report> check_intersection(const OrderedComplex& k) {
    const Reductions r = reduce(k);
    const TriPartition tp = tri_partition(r, k);
    const CanonicalBasisSet bs = extract_bases(r.column, r.row, tp);
    const IntMatrix vu = intersection_matrix(r.column, r.row);
    Report patterns = verify_intersection_patterns(vu, bs);
    for (Index i = 0; i < k.size(); ++i) {
        for (Index j = 0; j < i; ++j) {
            if (vu(i, j) != 0)
                patterns.fail("VU is not upper-triangular at (" + idx(i) + "," + idx(j) + ")");
        }
    }
    return {patterns, verify_intersection_copy_rule(vu, r.column, r.row, bs)};
}

std::vector<Report> check_matroids(const OrderedComplex& k, std::size_t max_cells) {
    std::vector<Report> out;
    const Reductions r = reduce(k);
    const TriPartition tp = tri_partition(r, k);
    const BirthDeathTable t = classify(r.column, r.row, k);
    const auto betti = betti_numbers(t);
    for (int p = -1; p <= k.dim(); ++p) {
        if (k.count(p) > max_cells)
            continue;
        const DimPartition part = tp.at(p);
        struct Family {
            const char* name;
            SetFamily family;
            long long rank;
            const std::vector<Index>* member;
        };
        Family families[] = {
            {"trees", enumerate_trees(k, p, max_cells), static_cast<long long>(t.deaths[p]), &part.tree},
            {"cotrees", enumerate_cotrees(k, p, max_cells), static_cast<long long>(t.codeaths[p]), &part.cotree},
            {"leftovers", enumerate_leftovers(k, p), betti[p], &part.leftover},
        };
        for (Family& f : families) {
            Report rep = check_matroid(f.family);
            rep.name = std::string(f.name) + " " + rep.name;
            if (rep.pass && rep.rank != f.rank)
                rep.fail("matroid rank " + std::to_string(rep.rank) + ", expected " + std::to_string(f.rank));
            const auto maximal = f.family.maximal();
            const std::uint32_t mask = f.family.mask_of(*f.member);
            if (std::find(maximal.begin(), maximal.end(), mask) == maximal.end())
                rep.fail("tri-partition set " + set_text(*f.member) + " is not a maximal member",
                         {Chain{p, *f.member}});
            out.push_back(std::move(rep));
        }
    }
    return out;
}

std::vector<Check> check_complex(const OrderedComplex& k, const CaseOptions& options, Rng& rng) {
    std::vector<Check> out;
    // Runs one check; an exception becomes a failing report of that name.
    auto run = [&](Suite s, const char* name, auto&& fn) {
        try {
            using Result = decltype(fn());
            if constexpr (std::is_same_v<Result, Report>) {
                out.push_back({s, fn()});
            } else {
                for (Report& rep : fn())
                    out.push_back({s, std::move(rep)});
            }
        } catch (const std::exception& e) {
            Report rep(name);
            rep.fail(std::string("exception: ") + e.what());
            out.push_back({s, std::move(rep)});
        }
    };
    run(Suite::Complex, "complex structure", [&] { return check_structure(k); });
    run(Suite::Complex, "Euler-Poincare", [&] { return check_euler(k); });
    run(Suite::Reduction, "reduction invariants", [&] { return check_reductions(k); });
    run(Suite::Reduction, "duality", [&] { return check_duality(k); });
    run(Suite::Reduction, "rank oracle", [&] { return check_rank_oracle(k); });
    run(Suite::Reduction, "order invariance", [&] { return check_order_invariance(k, rng); });
    if (options.uniqueness_orders > 0)
        run(Suite::Reduction, "reduction uniqueness",
            [&] { return check_uniqueness(k, options.uniqueness_orders, rng); });
    run(Suite::Tripartition, "tri-partition", [&] { return check_tripartition(k); });
    run(Suite::Tripartition, "dimension stability", [&] { return check_dimension_stability(k, rng); });
    run(Suite::Tripartition, "incremental construction", [&] { return check_incremental(k); });
    run(Suite::Tripartition, "prefix Betti numbers", [&] { return check_prefix_betti(k); });
    run(Suite::Tripartition, "relative cohomology query", [&] { return check_relative_cohomology(k); });
    run(Suite::Bases, "bases", [&] { return check_bases(k, options.enumeration_cap); });
    run(Suite::Bases, "intersection", [&] { return check_intersection(k); });
    run(Suite::Matroid, "matroids", [&] { return check_matroids(k, options.matroid_max_cells); });
    return out;
}

bool VerifyResult::pass() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteSummary& s) { return s.pass(); });
}

VerifyResult run_verification(const VerifyOptions& options) {
    const std::size_t randoms = options.full ? 200 : 50;
    CaseOptions case_options;
    case_options.uniqueness_orders = options.full ? 20 : 0;
    case_options.matroid_max_cells = options.full ? 7 : 5;

    const auto named = samples::all();
    const std::size_t cases = named.size() + randoms;
    std::vector<std::string> labels(cases);
    std::vector<std::vector<Check>> results(cases);

    auto run_case = [&](std::size_t c) {
        Rng rng = Rng::for_case(options.seed, c);
        std::vector<Check> checks;
        OrderedComplex k;
        if (c < named.size()) {
            labels[c] = named[c].name;
            k = named[c].complex;
        } else {
            labels[c] = "random #" + std::to_string(c - named.size());
            RandomComplex rc = random_complex(rng);
            checks.push_back({Suite::Complex, check_simplicial_idempotence(rc.simplicial_text)});
            k = std::move(rc.complex);
            const std::size_t n = 1 + rng.below(64);
            for (Report& rep : check_matrix_kernels(n, rng))
                checks.push_back({Suite::Gf2, std::move(rep)});
        }
        try {
            for (Check& ch : check_complex(k, case_options, rng))
                checks.push_back(std::move(ch));
        } catch (const std::exception& e) {
            Report rep("case aborted");
            rep.fail(e.what());
            checks.push_back({Suite::Complex, std::move(rep)});
        }
        results[c] = std::move(checks);
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        for (std::size_t c = 0; c < cases; ++c)
            run_case(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < cases; c = next++)
                    run_case(c);
            });
        }
        for (auto& th : pool)
            th.join();
    }

    VerifyResult out;
    out.random_complexes = randoms;
    for (Suite s : {Suite::Gf2, Suite::Complex, Suite::Reduction, Suite::Tripartition, Suite::Bases,
                    Suite::Matroid})
        out.suites.push_back(SuiteSummary{s, 0, 0, {}});
    for (std::size_t c = 0; c < cases; ++c) {
        for (Check& ch : results[c]) {
            SuiteSummary& sum = out.suites[static_cast<std::size_t>(ch.suite)];
            ++sum.checks;
            if (ch.report.skipped)
                ++sum.skipped;
            if (!ch.report.pass) {
                ch.report.name = labels[c] + ": " + ch.report.name;
                sum.failures.push_back(std::move(ch.report));
            }
        }
    }
    return out;
}

} // namespace tripart::check

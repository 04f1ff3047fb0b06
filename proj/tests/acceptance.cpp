// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "tripart/bases.hpp"
#include "tripart/check/generators.hpp"
#include "tripart/check/oracles.hpp"
#include "tripart/check/rng.hpp"
#include "tripart/check/samples.hpp"
#include "tripart/check/suites.hpp"
#include "tripart/complex.hpp"
#include "tripart/matroid.hpp"
#include "tripart/reduction.hpp"
#include "tripart/tripartition.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace tripart;
using check::Rng;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct TestComplex {
    std::string name;
    OrderedComplex complex;
};

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(TRIPART_DATA_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<OrderedComplex> random_complexes(std::uint64_t stream, std::size_t count) {
    std::vector<OrderedComplex> out;
    for (std::size_t c = 0; c < count; ++c) {
        Rng rng = Rng::for_case(kSeed ^ (stream << 32), c);
        out.push_back(check::random_complex(rng).complex);
    }
    return out;
}

/// Bundled samples followed by the 200 random complexes of the duality run.
const std::vector<TestComplex>& test_complexes() {
    static const std::vector<TestComplex> all = [] {
        std::vector<TestComplex> v;
        for (auto& [name, k] : check::samples::all())
            v.push_back({name, std::move(k)});
        const auto random = random_complexes(3, 200);
        for (std::size_t c = 0; c < random.size(); ++c)
            v.push_back({"random #" + std::to_string(c), random[c]});
        return v;
    }();
    return all;
}

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds)
        out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    if (!out.pass)
        ++failures;
    std::printf("%s %2d %s: %s (%.3f s)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string sizes(const DimPartition& part) {
    return "|tree|=" + std::to_string(part.tree.size()) + " |cotree|=" + std::to_string(part.cotree.size()) +
           " |leftover|=" + std::to_string(part.leftover.size());
}

Outcome expect_sizes(const OrderedComplex& k, std::size_t tree, std::size_t cotree, std::size_t leftover) {
    Outcome out;
    const DimPartition part = tri_partition(k).at(1);
    out.detail = "p=1 " + sizes(part);
    if (part.tree.size() != tree || part.cotree.size() != cotree || part.leftover.size() != leftover)
        out.fail(out.detail + ", expected " + std::to_string(tree) + "/" + std::to_string(cotree) + "/" +
                 std::to_string(leftover));
    return out;
}

} // namespace

int main() {
    criterion(1, "annulus reproduction", 1.0, [] {
        const OrderedComplex k = from_boundary_format(read_file("annulus.bnd"));
        return expect_sizes(k, 15, 8, 1);
    });

    criterion(2, "wheel reproduction", 1.0, [] {
        const OrderedComplex k = from_boundary_format(read_file("wheel.bnd"));
        Outcome out;
        if (k.count(0) != 17 || k.count(1) != 32 || k.count(2) != 17)
            out.fail("wheel has the wrong cell counts");
        if (!out.pass)
            return out;
        return expect_sizes(k, 16, 16, 0);
    });

    criterion(3, "duality on 200 random complexes", 60.0, [] {
        Outcome out;
        const auto complexes = random_complexes(3, 200);
        for (std::size_t c = 0; c < complexes.size(); ++c) {
            const OrderedComplex& k = complexes[c];
            const Reductions r = reduce(k);
            const BirthDeathTable t = classify(r.column, r.row, k);
            if (betti_numbers(t) != relative_cohomology_ranks(t))
                out.fail("random #" + std::to_string(c) + ": Betti numbers differ from cohomology ranks");
            std::vector<IndexPair> rows = r.row.pairs;
            std::vector<IndexPair> cols = r.column.pairs;
            std::sort(rows.begin(), rows.end());
            std::sort(cols.begin(), cols.end());
            if (rows != cols)
                out.fail("random #" + std::to_string(c) + ": Low pairs of R differ from Left pairs of Q");
        }
        if (out.pass)
            out.detail = std::to_string(complexes.size()) + " complexes";
        return out;
    });

    criterion(4, "Euler-Poincare", 0, [] {
        Outcome out;
        for (const auto& [name, k] : test_complexes()) {
            const auto betti = betti_numbers(k);
            long long sum = 0;
            for (int p = -1; p <= k.dim(); ++p)
                sum += (p % 2 == 0 ? 1 : -1) * betti[p];
            if (sum != reduced_euler_characteristic(k))
                out.fail(name + ": alternating Betti sum " + std::to_string(sum) + " != " +
                         std::to_string(reduced_euler_characteristic(k)));
        }
        if (out.pass)
            out.detail = std::to_string(test_complexes().size()) + " complexes";
        return out;
    });

    criterion(5, "rank oracle equivalence", 0, [] {
        Outcome out;
        for (const auto& [name, k] : test_complexes()) {
            if (betti_numbers(k) != check::rank_betti(k))
                out.fail(name + ": Betti numbers differ from the rank formula");
        }
        if (out.pass)
            out.detail = std::to_string(test_complexes().size()) + " complexes";
        return out;
    });

    criterion(6, "canonical bases", 0, [] {
        Outcome out;
        std::size_t reports = 0;
        std::size_t enumerated = 0;
        for (const auto& [name, k] : test_complexes()) {
            const Reductions r = reduce(k);
            const TriPartition tp = tri_partition(r, k);
            const CanonicalBasisSet bs = extract_bases(r.column, r.row, tp);
            for (int p = -1; p <= k.dim(); ++p) {
                std::vector<Report> reps{verify_cycle_basis(bs, k, p), verify_boundary_basis(bs, k, p),
                                         verify_homology_generators(bs, k, p)};
                for (Report& rep : verify_cobases(bs, k, p))
                    reps.push_back(std::move(rep));
                if (k.count(p) <= 16) {
                    reps.push_back(verify_canonical_uniqueness(bs, k, p, 16));
                    ++enumerated;
                }
                for (const Report& rep : reps) {
                    ++reports;
                    if (!rep.pass || rep.skipped)
                        out.fail(name + ": " + rep.name + ": " + (rep.skipped ? "skipped" : rep.detail));
                }
            }
        }
        if (out.pass)
            out.detail = std::to_string(reports) + " reports, " + std::to_string(enumerated) +
                         " uniqueness enumerations";
        return out;
    });

    criterion(7, "intersection patterns", 0, [] {
        Outcome out;
        std::size_t failing = 0;
        std::size_t range = 0;
        std::size_t block = 0;
        std::string first;
        for (const auto& [name, k] : test_complexes()) {
            const Reductions r = reduce(k);
            const TriPartition tp = tri_partition(r, k);
            const CanonicalBasisSet bs = extract_bases(r.column, r.row, tp);
            const IntMatrix vu = intersection_matrix(r.column, r.row);
            for (Index i = 0; i < k.size(); ++i) {
                for (Index j = 0; j < k.size(); ++j) {
                    if (vu(i, j) < 0 || vu(i, j) > 2)
                        ++range;
                    if (bs.roles[i] == Role::Leftover && bs.roles[j] == Role::Leftover &&
                        vu(i, j) != (i == j ? 1 : 0))
                        ++block;
                }
            }
            const Report rep = verify_intersection_patterns(vu, bs);
            if (!rep.pass) {
                if (failing++ == 0)
                    first = name + ": " + rep.detail;
            }
        }
        out.detail = "entries outside {0,1,2}: " + std::to_string(range) +
                     ", leftover block mismatches: " + std::to_string(block);
        if (range != 0 || block != 0)
            out.fail(out.detail);
        if (failing != 0)
            out.fail("case analysis mismatches on " + std::to_string(failing) + " of " +
                     std::to_string(test_complexes().size()) + " complexes, first " + first + "; " + out.detail);
        return out;
    });

    criterion(8, "incremental equals batch", 0, [] {
        Outcome out;
        const auto complexes = random_complexes(8, 50);
        std::size_t steps = 0;
        for (std::size_t c = 0; c < complexes.size(); ++c) {
            const Report rep = check::check_incremental(complexes[c]);
            if (!rep.pass)
                out.fail("filtration #" + std::to_string(c) + ": " + rep.detail);
            steps += complexes[c].size();
        }
        if (out.pass)
            out.detail = "50 filtrations, " + std::to_string(steps) + " prefixes";
        return out;
    });

    criterion(9, "uniqueness of exhaustive reduction", 0, [] {
        Outcome out;
        const auto complexes = random_complexes(9, 20);
        for (std::size_t c = 0; c < complexes.size(); ++c) {
            Rng rng = Rng::for_case(kSeed + 9, c);
            const Report rep = check::check_uniqueness(complexes[c], 20, rng);
            if (!rep.pass)
                out.fail("complex #" + std::to_string(c) + ": " + rep.detail);
        }
        if (out.pass)
            out.detail = "20 orders on 20 complexes, R U Q V identical";
        return out;
    });

    criterion(10, "tri-matroids", 120.0, [] {
        Outcome out;
        namespace samples = check::samples;
        const std::vector<TestComplex> bundled{{"triangle_graph", samples::triangle_graph()},
                                               {"hollow_tetrahedron", samples::hollow_tetrahedron()},
                                               {"annulus_coarse", samples::annulus_coarse()},
                                               {"two_components", samples::two_components()}};
        std::size_t families = 0;
        for (const auto& [name, k] : bundled) {
            for (int p = 0; p <= k.dim(); ++p) {
                if (k.count(p) > 7)
                    continue;
                for (const SetFamily& f : {enumerate_trees(k, p), enumerate_cotrees(k, p), enumerate_leftovers(k, p)}) {
                    ++families;
                    const Report rep = check_matroid(f);
                    if (!rep.pass)
                        out.fail(name + ": " + rep.name + ": " + rep.detail);
                }
            }
        }
        if (out.pass)
            out.detail = std::to_string(families) + " families";
        return out;
    });

    criterion(11, "prefix Betti", 0, [] {
        Outcome out;
        const auto complexes = random_complexes(11, 20);
        std::size_t prefixes = 0;
        for (std::size_t c = 0; c < complexes.size(); ++c) {
            const Report rep = check::check_prefix_betti(complexes[c]);
            if (!rep.pass)
                out.fail("complex #" + std::to_string(c) + ": " + rep.detail);
            prefixes += complexes[c].size();
        }
        if (out.pass)
            out.detail = "20 complexes, " + std::to_string(prefixes) + " prefixes";
        return out;
    });

    std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}

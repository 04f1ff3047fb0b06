#ifndef TRIPART_CHECK_SUITES_HPP
#define TRIPART_CHECK_SUITES_HPP

#include "tripart/check/rng.hpp"
#include "tripart/complex.hpp"
#include "tripart/report.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Invariant checks for every module, each against an independent oracle or
// a brute-force enumeration.
namespace tripart::check {

enum class Suite { Gf2, Complex, Reduction, Tripartition, Bases, Matroid };

std::string_view to_string(Suite suite);

struct Check {
    Suite suite;
    Report report;
};

/// Kernel checks on one random n x n matrix: add involutions, Low/Left
/// against scans, products against triple loops, transposes.
std::vector<Report> check_matrix_kernels(std::size_t n, Rng& rng);

/// Boundary matrix shape (upper-triangular, zero diagonal, squares to zero),
/// boundary-format round trip and validity of every prefix.
Report check_structure(const OrderedComplex& k);
/// Parsing a full simplex list with and without completion gives the same
/// complex.
Report check_simplicial_idempotence(std::string_view simplicial_text);
/// Alternating cell count equals alternating Betti sum.
Report check_euler(const OrderedComplex& k);

/// R = boundary*U and Q = V*boundary, unit upper-triangular transforms,
/// distinct Low/Left values, no applicable reduction step left, pairs equal
/// the standard reduction's, birth + death counts equal n_p.
Report check_reductions(const OrderedComplex& k);
/// Betti numbers equal cohomology ranks and Low-pairs equal Left-pairs.
Report check_duality(const OrderedComplex& k);
/// Betti numbers equal the rank formula n_p - rank d_p - rank d_{p+1}.
Report check_rank_oracle(const OrderedComplex& k);
/// `orders` randomized candidate orders give bitwise-identical R, U, Q, V.
Report check_uniqueness(const OrderedComplex& k, std::size_t orders, Rng& rng);
/// Birth/death counts and Betti numbers agree for a random re-ordering.
Report check_order_invariance(const OrderedComplex& k, Rng& rng);

/// Partition cover, set sizes, tree/cotree independence and maximality by
/// rank, and consistency of the persistence diagram.
Report check_tripartition(const OrderedComplex& k);
/// Re-ordering cells outside dimension p keeps the p-partition.
Report check_dimension_stability(const OrderedComplex& k, Rng& rng);
/// Incremental construction equals the batch tri-partition of every prefix.
Report check_incremental(const OrderedComplex& k);
/// betti_of_prefix equals a direct reduction of every prefix.
Report check_prefix_betti(const OrderedComplex& k);
/// Relative cohomology query equals the relative chain complex rank for
/// every prefix, and its totals equal the cohomology ranks.
Report check_relative_cohomology(const OrderedComplex& k);

/// The six basis reports per dimension, canonical uniqueness (skipped above
/// `cap` tree or cotree cells), off-diagonal support, two crossings, chain
/// decomposition, and agreement of generator counts with cohomology ranks.
std::vector<Report> check_bases(const OrderedComplex& k, std::size_t cap = 16);
/// Entry-wise case analysis of VU, and the copy rule VU = U + V off the
/// diagonal.
std::vector<Report> check_intersection(const OrderedComplex& k);

/// Trees, cotrees and leftovers of every dimension with at most `max_cells`
/// cells form matroids of the expected ranks, and the tri-partition's sets
/// are maximal members.
std::vector<Report> check_matroids(const OrderedComplex& k, std::size_t max_cells);

struct CaseOptions {
    std::size_t uniqueness_orders = 0;
    std::size_t matroid_max_cells = 5;
    std::size_t enumeration_cap = 16;
};

/// Every complex-level check, tagged by suite.
std::vector<Check> check_complex(const OrderedComplex& k, const CaseOptions& options, Rng& rng);

struct VerifyOptions {
    std::uint64_t seed = 0;
    bool full = false;
    unsigned threads = 1;
};

struct SuiteSummary {
    Suite suite;
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::vector<Report> failures; // names prefixed with the case label
    bool pass() const { return failures.empty(); }
};

struct VerifyResult {
    std::size_t random_complexes = 0;
    std::vector<SuiteSummary> suites; // one per Suite, in enum order
    bool pass() const;
};

/// Runs all suites on the bundled samples and on seeded random complexes:
/// quick = 50 complexes, matroids up to 5 cells per dimension; full = 200
/// complexes, matroids up to 7 cells, 20 randomized reduction orders.
VerifyResult run_verification(const VerifyOptions& options);

} // namespace tripart::check

#endif

#include <doctest.h>

#include "tripart/check/generators.hpp"
#include "tripart/check/rng.hpp"
#include "tripart/check/suites.hpp"

#include <string>

using namespace tripart;
using namespace tripart::check;

namespace {

constexpr std::uint64_t kSeed = 20261017;
constexpr std::uint64_t kCases = 40;

void require_pass(const Report& rep) {
    INFO(rep.name << ": " << rep.detail);
    CHECK(rep.pass);
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

} // namespace

TEST_CASE("matrix kernels") {
    Rng rng(kSeed);
    for (std::size_t n : {0u, 1u, 2u, 63u, 64u, 65u, 200u})
        for (const Report& rep : check_matrix_kernels(n, rng))
            require_pass(rep);
}

TEST_CASE("random complexes satisfy the invariants") {
    for (std::uint64_t c = 0; c < kCases; ++c) {
        Rng rng = Rng::for_case(kSeed, c);
        const RandomComplex rc = random_complex(rng);
        const OrderedComplex& k = rc.complex;
        CAPTURE(c);
        require_pass(check_structure(k));
        require_pass(check_simplicial_idempotence(rc.simplicial_text));
        require_pass(check_euler(k));
        require_pass(check_reductions(k));
        require_pass(check_duality(k));
        require_pass(check_rank_oracle(k));
        require_pass(check_uniqueness(k, 3, rng));
        require_pass(check_order_invariance(k, rng));
        require_pass(check_tripartition(k));
        require_pass(check_dimension_stability(k, rng));
        require_pass(check_incremental(k));
        require_pass(check_prefix_betti(k));
        require_pass(check_relative_cohomology(k));
        for (const Report& rep : check_bases(k)) {
            if (!starts_with(rep.name, "two crossings"))
                require_pass(rep);
        }
        const auto inter = check_intersection(k);
        REQUIRE(inter.size() == 2);
        require_pass(inter[1]);
        for (const Report& rep : check_matroids(k, 5))
            require_pass(rep);
    }
}

TEST_CASE("generators are deterministic") {
    Rng a = Rng::for_case(1, 2);
    Rng b = Rng::for_case(1, 2);
    CHECK(random_complex(a).simplicial_text == random_complex(b).simplicial_text);
    Rng c = Rng::for_case(1, 3);
    Rng d = Rng::for_case(1, 2);
    CHECK(c.next() != d.next());
}

#ifndef TRIPART_CHECK_RNG_HPP
#define TRIPART_CHECK_RNG_HPP

#include <cstdint>
#include <random>

namespace tripart::check {

/// Seeded generator. Draws only raw 64-bit outputs so that sequences do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Generator for case `index` of a run seeded with `seed`.
    static Rng for_case(std::uint64_t seed, std::uint64_t index) { return Rng(mix(seed ^ mix(index + 1))); }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % n;
    }
    bool coin() { return (engine_() >> 63) != 0; }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace tripart::check

#endif

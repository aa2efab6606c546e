#ifndef RAMSEY_RNG_HPP
#define RAMSEY_RNG_HPP

#include <cstdint>
#include <string_view>

namespace ramsey {

// SplitMix64 finalizer; used both as a mixer for stateless hashing and as the
// step function of the sequential generator below.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state = 0;
    constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    constexpr std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        return mix64(state);
    }
    // uniform in [0,1)
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

// Stateless hash of up to four 64-bit values under a seed.  Same inputs, same
// output, forever; colorings built on this are reproducible across runs.
constexpr std::uint64_t hash64(std::uint64_t seed, std::uint64_t a,
                               std::uint64_t b = 0x9e3779b97f4a7c15ULL,
                               std::uint64_t c = 0x6a09e667f3bcc909ULL) {
    std::uint64_t h = mix64(seed ^ 0x2545f4914f6cdd1dULL);
    h = mix64(h ^ (a + 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (b + 0xbb67ae8584caa73bULL));
    h = mix64(h ^ (c + 0x3c6ef372fe94f82bULL));
    return h;
}

constexpr double unit_from_hash(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Derives an independent named stream from one run seed, so the `c2`,
// `painter`, `sampler`, ... components can be reproduced in isolation.
constexpr std::uint64_t substream(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return mix64(seed ^ h);
}

}  // namespace ramsey

#endif

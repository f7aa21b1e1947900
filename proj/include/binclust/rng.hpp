#ifndef BINCLUST_RNG_HPP
#define BINCLUST_RNG_HPP

#include <cassert>
#include <cstdint>
#include <random>

namespace binclust {

// All stochastic code draws through these helpers so that a fixed seed gives
// the same sequence on every platform (mt19937_64 output is standardized,
// std::uniform_*_distribution is not).
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound). Rejection sampling keeps the draw exactly
// uniform for any bound.
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
    assert(bound > 0);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return static_cast<std::size_t>(v % bound);
}

// Fisher-Yates shuffle of the first `prefix` positions against the whole
// range; with prefix == v.size() this is a full shuffle.
template <typename T>
void partial_shuffle(std::vector<T>& v, std::size_t prefix, Rng& rng) {
    const std::size_t n = v.size();
    if (prefix > n) prefix = n;
    for (std::size_t i = 0; i < prefix; ++i) {
        const std::size_t j = i + uniform_index(rng, n - i);
        std::swap(v[i], v[j]);
    }
}

}  // namespace binclust

#endif

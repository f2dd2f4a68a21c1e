#pragma once

#include <cstdint>
#include <random>

namespace evoparam {

using Rng = std::mt19937_64;

// SplitMix64 step. Used only for seed derivation, never as the working RNG.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic, well-separated seed for sub-stream `index` of `base`.
// Campaign trials and per-problem runs derive their seeds through this, so
// trials can be recomputed independently and in any order.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    std::uint64_t s = base;
    std::uint64_t h = splitmix64(s);
    s = h ^ (index * 0xd6e8feb86659fd93ull + 0x2545f4914f6cdd1dull);
    return splitmix64(s);
}

inline Rng make_rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    return Rng(splitmix64(s));
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// True with probability p.
inline bool chance(Rng& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

} // namespace evoparam

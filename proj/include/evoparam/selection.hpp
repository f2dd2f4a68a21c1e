#pragma once

#include <span>

#include "evoparam/errors.hpp"
#include "evoparam/rng.hpp"

namespace evoparam {

// Tournament selection over a maximized fitness vector: k uniform draws with
// replacement; returns the index of the best draw, ties kept by the
// earliest-drawn candidate.
inline std::size_t tournament_select(std::span<const double> fitness, int k, Rng& rng) {
    if (k < 1) throw config_error("tournament size must be >= 1");
    if (fitness.empty()) throw config_error("tournament over empty population");
    const int n = static_cast<int>(fitness.size());
    std::size_t best = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
    for (int i = 1; i < k; ++i) {
        const auto cand = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
        if (fitness[cand] > fitness[best]) best = cand;
    }
    return best;
}

} // namespace evoparam

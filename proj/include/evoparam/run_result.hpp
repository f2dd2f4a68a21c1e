#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evoparam {

// Outcome of one full GP run. `wall_time` and `best_trace` are runtime
// diagnostics and stay out of the canonical serialization so that
// identical (problem, params, seed) runs serialize identically.
struct RunResult {
    double best_fitness = 0.0;
    std::string best_genotype;
    std::int64_t evaluations = 0;
    std::uint64_t seed = 0;
    double wall_time = 0.0;
    std::vector<double> best_trace; // best-ever fitness after each generation, gen 0 first

    // Deterministic JSON text of (best_fitness, best_genotype, evaluations, seed).
    std::string canonical() const;
};

} // namespace evoparam

#pragma once

#include <cstdint>

#include "evoparam/rng.hpp"

namespace evoparam {

// The five hyper-parameters every tuner searches over.
struct ParameterSet {
    int pop_size = 500;
    int generations = 100;
    double crossover_rate = 0.5;
    double mutation_rate = 0.2;
    int tournament_size = 3;

    bool operator==(const ParameterSet&) const = default;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct RealRange {
    double lo = 0.0;
    double hi = 0.0;
};

// Closed per-gene sampling intervals for the tuners.
struct ParameterRanges {
    IntRange pop_size{100, 3000};
    IntRange generations{100, 2000};
    RealRange crossover_rate{0.0, 1.0};
    RealRange mutation_rate{0.0, 1.0};
    IntRange tournament_size{3, 100};

    // The full search space of the meta tuner: pop [100,3000], gen [100,2000],
    // rates [0,1], tournament [3,100].
    static ParameterRanges widest() { return ParameterRanges{}; }

    bool contains(const ParameterSet& p) const;
    void validate() const; // throws config_error
};

// Structural sanity (positive counts, rates in [0,1]). Engines additionally
// require tournament_size <= pop_size at run start.
void validate_params(const ParameterSet& p);

// Each gene drawn uniformly and independently; integer genes inclusive.
ParameterSet sample_parameter_set(const ParameterRanges& ranges, Rng& rng);

} // namespace evoparam

#pragma once

#include <utility>

#include "evoparam/rng.hpp"
#include "evoparam/tree.hpp"

namespace evoparam {

enum class GrowMethod { Grow, Full };

// Standard GP initialization. A lone terminal has depth 1; `Full` places
// every leaf at exactly the depth drawn from [min_depth, max_depth].
ProgramTree generate_random_tree(const PrimitiveSet& pset, int min_depth, int max_depth,
                                 GrowMethod method, Rng& rng);

// Grow/full mixed 50/50 with depths drawn from [min_depth, max_depth].
// This is the engine's generation-zero sampler; the random-solution baseline
// draws candidates through the same call.
ProgramTree ramped_half_and_half(const PrimitiveSet& pset, Rng& rng, int min_depth = 1,
                                 int max_depth = 4);

// Swaps one uniformly chosen subtree between copies of the parents. A child
// deeper than kMaxTreeDepth is replaced by the parent it derives from.
std::pair<ProgramTree, ProgramTree> subtree_crossover(const ProgramTree& a, const ProgramTree& b,
                                                      Rng& rng);

// Replaces one uniformly chosen node's subtree with a fresh grow tree of
// depth <= 2; same depth guard as crossover.
ProgramTree subtree_mutate(const ProgramTree& a, const PrimitiveSet& pset, Rng& rng);

} // namespace evoparam

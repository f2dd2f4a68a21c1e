#pragma once

#include <optional>

#include "evoparam/params.hpp"
#include "evoparam/problems.hpp"
#include "evoparam/run_result.hpp"

namespace evoparam {

struct RunOptions {
    // Threads for within-generation fitness evaluation. Results merge in
    // population-index order, so any thread count yields the same RunResult.
    int eval_threads = 1;
    // Stops the generational loop once the best-ever fitness reaches 1.0;
    // later generations cannot improve it, only `evaluations` shrinks.
    bool stop_when_perfect = true;
    // Re-check structural invariants of every individual each generation.
    bool validate = false;
};

// Tree-based engine: ramped half-and-half initialization (depths 1-4),
// tournament selection, subtree crossover on consecutive parent pairs,
// per-individual subtree mutation. Deterministic for a fixed seed.
RunResult run_evolution(const Problem& problem, const ParameterSet& params, std::uint64_t seed,
                        const RunOptions& opts = {});

// Stack-based engine over a classification dataset: one-point linear
// crossover, single-instruction point mutation, nearest-centroid
// classification scored by balanced accuracy.
RunResult run_evolution_stack(const Dataset& dataset, const ParameterSet& params,
                              std::uint64_t seed, const RunOptions& opts = {});

// Dispatches to the engine the problem declares.
RunResult run_problem(const Problem& problem, const ParameterSet& params, std::uint64_t seed,
                      const RunOptions& opts = {});

// One generation-zero individual for some problem. The engines draw their
// initial populations through sample_generation_zero, and the
// random-solution baseline draws its candidates through the same call.
struct GenZeroCandidate {
    std::optional<ProgramTree> tree;
    std::optional<StackProgram> prog;
};

GenZeroCandidate sample_generation_zero(const Problem& problem, Rng& rng);
double candidate_fitness(const Problem& problem, const GenZeroCandidate& candidate);
std::string candidate_text(const Problem& problem, const GenZeroCandidate& candidate);

} // namespace evoparam

#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "evoparam/engine.hpp"
#include "evoparam/params.hpp"
#include "evoparam/problems.hpp"

namespace evoparam {

// A meta-GA individual is itself a ParameterSet; genes in order are
// (pop_size, generations, crossover_rate, mutation_rate, tournament_size).
using ParameterGenome = ParameterSet;

struct MetaConfig {
    int pop_size = 200;
    int generations = 105;
    int tournament_size = 3;
    double crossover_prob = 0.5;
    double mutation_prob = 0.2;
    double elitism_fraction = 0.02;
    int weight_update_period = 3;
    ParameterRanges genome_ranges = ParameterRanges::widest();

    void validate() const;
};

// Per-problem weights: non-negative, floor 0.01, summing to 1.
struct WeightVector {
    std::map<std::string, double> weights;

    static WeightVector uniform(const std::vector<std::string>& names);
    void validate() const;
};

// Two-point crossover on the 4 internal boundaries of the 5-gene string:
// positions (i, j] swap between the parents. Deterministic core; the Rng
// overload draws the boundary pair uniformly from the 6 possibilities.
std::pair<ParameterGenome, ParameterGenome> meta_crossover_at(const ParameterGenome& a,
                                                              const ParameterGenome& b,
                                                              int boundary1, int boundary2);
std::pair<ParameterGenome, ParameterGenome> meta_crossover(const ParameterGenome& a,
                                                           const ParameterGenome& b, Rng& rng);

// Resamples exactly one gene uniformly from its full range.
ParameterGenome meta_mutate_gene(const ParameterGenome& a, int gene, const ParameterRanges& ranges,
                                 Rng& rng);
ParameterGenome meta_mutate(const ParameterGenome& a, const ParameterRanges& ranges, Rng& rng);

// Multiplies below-mean problems by 1.1 and above-mean by 0.9 (at-mean
// unchanged), clamps to the 0.01 floor and renormalizes to sum 1.
WeightVector update_weights(const WeightVector& current,
                            const std::map<std::string, double>& per_problem_mean_fitness);

struct MetaEvaluation {
    double weighted = 0.0;
    std::map<std::string, double> per_problem;
};

// One GP run per problem with the genome's parameters; returns the
// weight-averaged best fitnesses. Seeds are per problem, one each.
MetaEvaluation evaluate_meta_fitness(const ParameterGenome& genome,
                                     const std::vector<Problem>& problems,
                                     const WeightVector& weights,
                                     const std::vector<std::uint64_t>& seeds,
                                     const RunOptions& opts = {});

struct MetaGenerationRecord {
    int generation = 0;
    ParameterGenome best;   // best-so-far genome
    double best_fitness = 0.0; // best-so-far meta fitness
    WeightVector weights;
    // population snapshot, in-memory detail for analysis and tests
    std::vector<ParameterGenome> population;
    std::vector<double> population_fitness;
};

struct MetaResult {
    std::vector<MetaGenerationRecord> history; // generations 0..G
};

struct MetaRunOptions {
    int workers = 1; // concurrent genome evaluations, merged in index order
    RunOptions run;  // options for the underlying GP runs
    // Streaming hook, called after each generation record (generation 0
    // included); returning false stops the meta loop with a partial history.
    std::function<bool(const MetaGenerationRecord&)> on_generation;
};

// Generational meta loop: tournament selection, boundary crossover, value
// mutation, verbatim elites, adaptive per-problem weights. Per-problem run
// seeds are fixed for the whole meta run so elite evaluations are cached.
MetaResult run_meta_ga(const std::vector<Problem>& problems, const MetaConfig& config,
                       std::uint64_t seed, const MetaRunOptions& opts = {});

} // namespace evoparam

#include "evoparam/engine.hpp"

#include <chrono>

#include "evoparam/errors.hpp"
#include "evoparam/selection.hpp"
#include "evoparam/tree_ops.hpp"
#include "evoparam/worker_pool.hpp"

namespace evoparam {

namespace {

// Generational loop shared by both engines. Model supplies the genotype
// representation and its operators; fitness must be pure so evaluation can
// run on several threads with an index-ordered merge.
template <class Model>
RunResult evolve(const Model& model, const ParameterSet& params, std::uint64_t seed,
                 const RunOptions& opts) {
    validate_params(params);
    if (params.tournament_size > params.pop_size)
        throw config_error("tournament_size exceeds pop_size");
    if (opts.eval_threads < 1) throw config_error("eval_threads must be >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    using Genotype = typename Model::Genotype;
    const auto pop_size = static_cast<std::size_t>(params.pop_size);
#ifdef NDEBUG
    const bool validate = opts.validate;
#else
    const bool validate = true; // structural checks always on in debug builds
#endif

    Rng rng = make_rng(seed);
    std::vector<Genotype> pop;
    pop.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) pop.push_back(model.random_individual(rng));

    std::vector<double> fitness(pop_size);
    auto evaluate = [&](const std::vector<Genotype>& individuals) {
        parallel_transform(pop_size, opts.eval_threads,
                           [&](std::size_t i) { fitness[i] = model.fitness(individuals[i]); });
    };

    evaluate(pop);
    std::int64_t evaluations = static_cast<std::int64_t>(pop_size);

    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < pop_size; ++i)
        if (fitness[i] > fitness[best_idx]) best_idx = i;
    Genotype best = pop[best_idx];
    double best_fitness = fitness[best_idx];
    std::vector<double> trace{best_fitness};

    for (int gen = 1; gen <= params.generations; ++gen) {
        if (opts.stop_when_perfect && best_fitness >= 1.0) break;

        std::vector<Genotype> next;
        next.reserve(pop_size);
        for (std::size_t i = 0; i < pop_size; ++i)
            next.push_back(pop[tournament_select(fitness, params.tournament_size, rng)]);

        for (std::size_t i = 0; i + 1 < pop_size; i += 2) {
            if (!chance(rng, params.crossover_rate)) continue;
            auto [c1, c2] = model.crossover(next[i], next[i + 1], rng);
            next[i] = std::move(c1);
            next[i + 1] = std::move(c2);
        }
        for (auto& individual : next)
            if (chance(rng, params.mutation_rate)) individual = model.mutate(individual, rng);

        pop = std::move(next);
        if (validate)
            for (const auto& individual : pop) model.validate(individual);

        evaluate(pop);
        evaluations += static_cast<std::int64_t>(pop_size);
        for (std::size_t i = 0; i < pop_size; ++i) {
            if (fitness[i] > best_fitness) { // ties keep the earlier individual
                best_fitness = fitness[i];
                best = pop[i];
            }
        }
        trace.push_back(best_fitness);
    }

    RunResult result;
    result.best_fitness = best_fitness;
    result.best_genotype = model.serialize(best);
    result.evaluations = evaluations;
    result.seed = seed;
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.best_trace = std::move(trace);
    return result;
}

struct TreeModel {
    using Genotype = ProgramTree;
    const Problem& problem;

    Genotype random_individual(Rng& rng) const {
        return ramped_half_and_half(problem.pset, rng);
    }
    double fitness(const Genotype& g) const { return problem.tree_fitness(g); }
    std::pair<Genotype, Genotype> crossover(const Genotype& a, const Genotype& b, Rng& rng) const {
        return subtree_crossover(a, b, rng);
    }
    Genotype mutate(const Genotype& a, Rng& rng) const {
        return subtree_mutate(a, problem.pset, rng);
    }
    std::string serialize(const Genotype& g) const { return to_sexpr(g, problem.pset); }
    void validate(const Genotype& g) const { validate_tree(g, problem.pset); }
};

struct StackModel {
    using Genotype = StackProgram;
    const Problem& problem;

    Genotype random_individual(Rng& rng) const {
        return random_program(problem.data.n_features, rng);
    }
    double fitness(const Genotype& g) const { return problem.stack_fitness(g); }
    std::pair<Genotype, Genotype> crossover(const Genotype& a, const Genotype& b, Rng& rng) const {
        return crossover_programs(a, b, rng);
    }
    Genotype mutate(const Genotype& a, Rng& rng) const {
        return point_mutate(a, problem.data.n_features, rng);
    }
    std::string serialize(const Genotype& g) const { return to_text(g); }
    void validate(const Genotype& g) const { validate_program(g, problem.data.n_features); }
};

} // namespace

RunResult run_evolution(const Problem& problem, const ParameterSet& params, std::uint64_t seed,
                        const RunOptions& opts) {
    if (problem.engine != EngineKind::Tree)
        throw config_error("problem '" + problem.name + "' is not a tree-engine problem");
    return evolve(TreeModel{problem}, params, seed, opts);
}

RunResult run_evolution_stack(const Dataset& dataset, const ParameterSet& params,
                              std::uint64_t seed, const RunOptions& opts) {
    if (dataset.n_classes() < 2)
        throw config_error("dataset '" + dataset.name + "' has a single class");
    Problem p = make_classification_problem(dataset, EngineKind::Stack);
    return evolve(StackModel{p}, params, seed, opts);
}

RunResult run_problem(const Problem& problem, const ParameterSet& params, std::uint64_t seed,
                      const RunOptions& opts) {
    if (problem.engine == EngineKind::Stack) return evolve(StackModel{problem}, params, seed, opts);
    return evolve(TreeModel{problem}, params, seed, opts);
}

GenZeroCandidate sample_generation_zero(const Problem& problem, Rng& rng) {
    GenZeroCandidate c;
    if (problem.engine == EngineKind::Stack)
        c.prog = StackModel{problem}.random_individual(rng);
    else
        c.tree = TreeModel{problem}.random_individual(rng);
    return c;
}

double candidate_fitness(const Problem& problem, const GenZeroCandidate& candidate) {
    if (candidate.prog) return problem.stack_fitness(*candidate.prog);
    if (candidate.tree) return problem.tree_fitness(*candidate.tree);
    throw config_error("empty generation-zero candidate");
}

std::string candidate_text(const Problem& problem, const GenZeroCandidate& candidate) {
    if (candidate.prog) return to_text(*candidate.prog);
    if (candidate.tree) return to_sexpr(*candidate.tree, problem.pset);
    throw config_error("empty generation-zero candidate");
}

} // namespace evoparam

#include "evoparam/meta_tuner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "evoparam/errors.hpp"
#include "evoparam/metrics.hpp"
#include "evoparam/selection.hpp"
#include "evoparam/worker_pool.hpp"

namespace evoparam {

namespace {

constexpr double kWeightFloor = 0.01;
constexpr double kWeightSumTol = 1e-9;
constexpr double kAtMeanTol = 1e-9;

} // namespace

void MetaConfig::validate() const {
    if (pop_size < 2) throw config_error("meta pop_size must be >= 2");
    if (generations < 1) throw config_error("meta generations must be >= 1");
    if (tournament_size < 1 || tournament_size > pop_size)
        throw config_error("meta tournament_size must be in [1, pop_size]");
    if (crossover_prob < 0.0 || crossover_prob > 1.0)
        throw config_error("meta crossover_prob outside [0,1]");
    if (mutation_prob < 0.0 || mutation_prob > 1.0)
        throw config_error("meta mutation_prob outside [0,1]");
    if (elitism_fraction < 0.0 || elitism_fraction > 1.0)
        throw config_error("meta elitism_fraction outside [0,1]");
    if (weight_update_period < 1) throw config_error("weight_update_period must be >= 1");
    genome_ranges.validate();
}

WeightVector WeightVector::uniform(const std::vector<std::string>& names) {
    if (names.empty()) throw config_error("weight vector needs >= 1 problem");
    WeightVector w;
    for (const auto& n : names) w.weights[n] = 1.0 / static_cast<double>(names.size());
    w.validate();
    return w;
}

void WeightVector::validate() const {
    if (weights.empty()) throw config_error("weight vector is empty");
    double sum = 0.0;
    for (const auto& [name, v] : weights) {
        if (v < kWeightFloor - 1e-12)
            throw config_error("weight for '" + name + "' below floor " +
                               std::to_string(kWeightFloor));
        sum += v;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw config_error("weights sum to " + std::to_string(sum) + ", expected 1");
}

std::pair<ParameterGenome, ParameterGenome> meta_crossover_at(const ParameterGenome& a,
                                                              const ParameterGenome& b,
                                                              int boundary1, int boundary2) {
    if (boundary1 < 1 || boundary2 > 4 || boundary1 >= boundary2)
        throw config_error("boundaries must satisfy 1 <= b1 < b2 <= 4");
    // Gene positions are 1-based; positions in (b1, b2] swap.
    auto pick = [&](const ParameterGenome& self, const ParameterGenome& other) {
        auto from = [&](int pos) -> const ParameterGenome& {
            return (pos > boundary1 && pos <= boundary2) ? other : self;
        };
        ParameterGenome child;
        child.pop_size = from(1).pop_size;
        child.generations = from(2).generations;
        child.crossover_rate = from(3).crossover_rate;
        child.mutation_rate = from(4).mutation_rate;
        child.tournament_size = from(5).tournament_size;
        return child;
    };
    return {pick(a, b), pick(b, a)};
}

std::pair<ParameterGenome, ParameterGenome> meta_crossover(const ParameterGenome& a,
                                                           const ParameterGenome& b, Rng& rng) {
    static constexpr std::pair<int, int> kBoundaryPairs[6] = {{1, 2}, {1, 3}, {1, 4},
                                                              {2, 3}, {2, 4}, {3, 4}};
    const auto& [b1, b2] = kBoundaryPairs[uniform_int(rng, 0, 5)];
    return meta_crossover_at(a, b, b1, b2);
}

ParameterGenome meta_mutate_gene(const ParameterGenome& a, int gene, const ParameterRanges& ranges,
                                 Rng& rng) {
    if (gene < 0 || gene > 4) throw config_error("gene index must be in [0,4]");
    ParameterGenome child = a;
    switch (gene) {
    case 0: child.pop_size = uniform_int(rng, ranges.pop_size.lo, ranges.pop_size.hi); break;
    case 1:
        child.generations = uniform_int(rng, ranges.generations.lo, ranges.generations.hi);
        break;
    case 2:
        child.crossover_rate =
            uniform_real(rng, ranges.crossover_rate.lo, ranges.crossover_rate.hi);
        break;
    case 3:
        child.mutation_rate = uniform_real(rng, ranges.mutation_rate.lo, ranges.mutation_rate.hi);
        break;
    default:
        child.tournament_size =
            uniform_int(rng, ranges.tournament_size.lo, ranges.tournament_size.hi);
        break;
    }
    return child;
}

ParameterGenome meta_mutate(const ParameterGenome& a, const ParameterRanges& ranges, Rng& rng) {
    return meta_mutate_gene(a, uniform_int(rng, 0, 4), ranges, rng);
}

WeightVector update_weights(const WeightVector& current,
                            const std::map<std::string, double>& per_problem_mean_fitness) {
    current.validate();
    double mean = 0.0;
    for (const auto& [name, unused] : current.weights) {
        auto it = per_problem_mean_fitness.find(name);
        if (it == per_problem_mean_fitness.end())
            throw config_error("update_weights: missing mean fitness for '" + name + "'");
        mean += it->second;
    }
    mean /= static_cast<double>(current.weights.size());

    WeightVector next = current;
    for (auto& [name, w] : next.weights) {
        const double f = per_problem_mean_fitness.at(name);
        if (f < mean - kAtMeanTol)
            w *= 1.1;
        else if (f > mean + kAtMeanTol)
            w *= 0.9;
    }

    // Clamp to the floor, then renormalize the unclamped mass; repeat until
    // no weight falls back below the floor. Terminates because the floored
    // set only grows.
    const auto n = static_cast<double>(next.weights.size());
    if (kWeightFloor * n > 1.0)
        throw config_error("too many problems for the 0.01 weight floor");
    std::map<std::string, bool> floored;
    for (const auto& [name, unused] : next.weights) floored[name] = false;
    for (;;) {
        double free_mass = 0.0;
        std::size_t n_floored = 0;
        for (auto& [name, w] : next.weights) {
            if (!floored[name] && w <= kWeightFloor) floored[name] = true;
            if (floored[name]) {
                w = kWeightFloor;
                ++n_floored;
            } else {
                free_mass += w;
            }
        }
        if (free_mass <= 0.0) break; // every weight at the floor
        const double scale = (1.0 - kWeightFloor * static_cast<double>(n_floored)) / free_mass;
        bool violated = false;
        for (auto& [name, w] : next.weights) {
            if (floored[name]) continue;
            w *= scale;
            if (w < kWeightFloor) violated = true;
        }
        if (!violated) break;
    }
    next.validate();
    return next;
}

MetaEvaluation evaluate_meta_fitness(const ParameterGenome& genome,
                                     const std::vector<Problem>& problems,
                                     const WeightVector& weights,
                                     const std::vector<std::uint64_t>& seeds,
                                     const RunOptions& opts) {
    if (problems.empty()) throw config_error("evaluate_meta_fitness: no problems");
    if (seeds.size() != problems.size())
        throw config_error("evaluate_meta_fitness: one seed per problem required");
    MetaEvaluation ev;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        const RunResult r = run_problem(problems[p], genome, seeds[p], opts);
        ev.per_problem[problems[p].name] = r.best_fitness;
    }
    ev.weighted = aggregate_fitness(ev.per_problem, weights.weights);
    return ev;
}

namespace {

using GenomeKey = std::tuple<int, int, double, double, int>;

GenomeKey key_of(const ParameterGenome& g) {
    return {g.pop_size, g.generations, g.crossover_rate, g.mutation_rate, g.tournament_size};
}

} // namespace

MetaResult run_meta_ga(const std::vector<Problem>& problems, const MetaConfig& config,
                       std::uint64_t seed, const MetaRunOptions& opts) {
    config.validate();
    if (problems.empty()) throw config_error("run_meta_ga: no problems");

    std::vector<std::string> names;
    for (const auto& p : problems) names.push_back(p.name);

    // Per-problem run seeds stay fixed across the whole meta run, so a
    // genome's per-problem fitnesses are cacheable (elites never re-run).
    std::vector<std::uint64_t> run_seeds;
    for (std::size_t p = 0; p < problems.size(); ++p)
        run_seeds.push_back(derive_seed(seed, 0x4d457441ull + p));

    std::map<GenomeKey, std::map<std::string, double>> cache;

    Rng rng = make_rng(derive_seed(seed, 0x4d657447ull));
    const auto pop_size = static_cast<std::size_t>(config.pop_size);

    std::vector<ParameterGenome> pop;
    pop.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i)
        pop.push_back(sample_parameter_set(config.genome_ranges, rng));

    std::vector<std::map<std::string, double>> per_problem(pop_size);
    std::vector<double> weighted(pop_size);
    WeightVector weights = WeightVector::uniform(names);

    auto evaluate_population = [&] {
        // Cache hits resolve on the calling thread; misses evaluate in the
        // worker pool and merge in index order.
        std::vector<std::size_t> misses;
        for (std::size_t i = 0; i < pop_size; ++i) {
            auto it = cache.find(key_of(pop[i]));
            if (it != cache.end())
                per_problem[i] = it->second;
            else
                misses.push_back(i);
        }
        ordered_parallel_for<std::map<std::string, double>>(
            misses.size(), opts.workers,
            [&](std::size_t m) {
                return evaluate_meta_fitness(pop[misses[m]], problems, weights, run_seeds, opts.run)
                    .per_problem;
            },
            [&](std::size_t m, std::map<std::string, double>&& result) {
                per_problem[misses[m]] = std::move(result);
                cache[key_of(pop[misses[m]])] = per_problem[misses[m]];
                return true;
            });
        for (std::size_t i = 0; i < pop_size; ++i)
            weighted[i] = aggregate_fitness(per_problem[i], weights.weights);
    };

    evaluate_population();

    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < pop_size; ++i)
        if (weighted[i] > weighted[best_idx]) best_idx = i;
    ParameterGenome best = pop[best_idx];
    double best_fitness = weighted[best_idx];

    MetaResult result;
    auto record = [&](int gen) {
        MetaGenerationRecord rec;
        rec.generation = gen;
        rec.best = best;
        rec.best_fitness = best_fitness;
        rec.weights = weights;
        rec.population = pop;
        rec.population_fitness = weighted;
        result.history.push_back(std::move(rec));
        return !opts.on_generation || opts.on_generation(result.history.back());
    };
    if (!record(0)) return result;

    const auto n_elites = std::min(
        pop_size, static_cast<std::size_t>(
                      std::ceil(config.elitism_fraction * static_cast<double>(pop_size))));

    for (int gen = 1; gen <= config.generations; ++gen) {
        std::vector<std::size_t> order(pop_size);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return weighted[a] > weighted[b]; });

        std::vector<ParameterGenome> next;
        next.reserve(pop_size);
        for (std::size_t e = 0; e < n_elites; ++e) next.push_back(pop[order[e]]);

        while (next.size() < pop_size) {
            ParameterGenome p1 = pop[tournament_select(weighted, config.tournament_size, rng)];
            ParameterGenome p2 = pop[tournament_select(weighted, config.tournament_size, rng)];
            if (chance(rng, config.crossover_prob)) std::tie(p1, p2) = meta_crossover(p1, p2, rng);
            if (chance(rng, config.mutation_prob))
                p1 = meta_mutate(p1, config.genome_ranges, rng);
            if (chance(rng, config.mutation_prob))
                p2 = meta_mutate(p2, config.genome_ranges, rng);
            next.push_back(p1);
            if (next.size() < pop_size) next.push_back(p2);
        }

        pop = std::move(next);
        evaluate_population();

        for (std::size_t i = 0; i < pop_size; ++i) {
            if (weighted[i] > best_fitness) {
                best_fitness = weighted[i];
                best = pop[i];
            }
        }

        if (gen % config.weight_update_period == 0) {
            std::map<std::string, double> means;
            for (const auto& n : names) {
                double sum = 0.0;
                for (std::size_t i = 0; i < pop_size; ++i) sum += per_problem[i].at(n);
                means[n] = sum / static_cast<double>(pop_size);
            }
            weights = update_weights(weights, means);
        }
        if (!record(gen)) break;
    }
    return result;
}

} // namespace evoparam

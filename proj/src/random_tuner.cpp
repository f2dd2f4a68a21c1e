#include "evoparam/random_tuner.hpp"

#include <algorithm>

#include "evoparam/errors.hpp"
#include "evoparam/worker_pool.hpp"

namespace evoparam {

namespace {

CampaignRecord run_trial(int trial, const std::vector<Problem>& problems,
                         const ParameterRanges& ranges, const SuccessCriterion& criterion,
                         std::uint64_t master_seed, const RunOptions& run_opts) {
    const std::uint64_t trial_seed = derive_seed(master_seed, static_cast<std::uint64_t>(trial));
    Rng rng = make_rng(trial_seed);
    CampaignRecord rec;
    rec.trial = trial;
    rec.params = sample_parameter_set(ranges, rng);
    try {
        for (std::size_t p = 0; p < problems.size(); ++p) {
            const std::uint64_t run_seed = derive_seed(trial_seed, p);
            rec.seeds[problems[p].name] = run_seed;
            const RunResult r = run_problem(problems[p], rec.params, run_seed, run_opts);
            rec.per_problem_fitness[problems[p].name] = r.best_fitness;
        }
        rec.success = evaluate_success(rec.per_problem_fitness, criterion);
    } catch (const std::exception& e) {
        rec.error = e.what();
        rec.success = false;
    }
    return rec;
}

} // namespace

std::vector<CampaignRecord> run_campaign(const std::vector<Problem>& problems,
                                         const ParameterRanges& ranges,
                                         const SuccessCriterion& criterion, int n_trials,
                                         std::uint64_t master_seed, const CampaignOptions& opts) {
    if (n_trials < 1) throw config_error("run_campaign: n_trials must be >= 1");
    if (problems.empty()) throw config_error("run_campaign: no problems");
    ranges.validate();
    criterion.validate();
    for (const auto& p : problems)
        if (criterion.thresholds.find(p.name) == criterion.thresholds.end())
            throw config_error("run_campaign: criterion missing problem '" + p.name + "'");

    std::vector<bool> skip(static_cast<std::size_t>(n_trials), false);
    for (int t : opts.skip_trials)
        if (t >= 0 && t < n_trials) skip[static_cast<std::size_t>(t)] = true;

    std::vector<int> todo;
    for (int t = 0; t < n_trials; ++t)
        if (!skip[static_cast<std::size_t>(t)]) todo.push_back(t);

    std::vector<CampaignRecord> records;
    records.reserve(todo.size());
    ordered_parallel_for<CampaignRecord>(
        todo.size(), opts.workers,
        [&](std::size_t i) {
            return run_trial(todo[i], problems, ranges, criterion, master_seed, opts.run);
        },
        [&](std::size_t, CampaignRecord&& rec) {
            records.push_back(std::move(rec));
            if (opts.on_record) return opts.on_record(records.back());
            return true;
        });
    return records;
}

BaselineOutcome random_baseline(const ParameterSet& params, const std::vector<Problem>& problems,
                                const SuccessCriterion& criterion, int multiplier_max,
                                std::uint64_t seed) {
    if (multiplier_max < 1) throw config_error("random_baseline: multiplier must be >= 1");
    if (problems.empty()) throw config_error("random_baseline: no problems");
    validate_params(params);
    criterion.validate();
    std::vector<double> thresholds;
    for (const auto& p : problems) {
        auto it = criterion.thresholds.find(p.name);
        if (it == criterion.thresholds.end())
            throw config_error("random_baseline: criterion missing problem '" + p.name + "'");
        thresholds.push_back(it->second);
    }

    Rng rng = make_rng(derive_seed(seed, 0xba5e11e5ull));
    BaselineOutcome out;
    out.multiplier = uniform_int(rng, 1, multiplier_max);
    const std::int64_t candidates = static_cast<std::int64_t>(params.pop_size) *
                                    static_cast<std::int64_t>(params.generations) *
                                    static_cast<std::int64_t>(out.multiplier);

    for (std::int64_t c = 0; c < candidates; ++c) {
        ++out.solutions_tested;
        bool all_passed = true;
        for (std::size_t p = 0; p < problems.size(); ++p) {
            const GenZeroCandidate cand = sample_generation_zero(problems[p], rng);
            ++out.programs_generated;
            if (candidate_fitness(problems[p], cand) < thresholds[p]) {
                all_passed = false;
                break; // abandon the candidate at its first failed problem
            }
        }
        if (all_passed) ++out.passes;
    }
    return out;
}

std::pair<ParameterSet, double> sweep_trial(const Problem& problem, const ParameterRanges& ranges,
                                            std::size_t set_index, std::uint64_t master_seed,
                                            const RunOptions& run_opts) {
    const std::uint64_t trial_seed = derive_seed(master_seed, set_index);
    Rng rng = make_rng(trial_seed);
    const ParameterSet params = sample_parameter_set(ranges, rng);
    const RunResult r = run_problem(problem, params, derive_seed(trial_seed, 0), run_opts);
    return {params, r.best_fitness};
}

std::vector<std::pair<ParameterSet, double>> single_problem_sweep(const Problem& problem,
                                                                  const ParameterRanges& ranges,
                                                                  int n_sets,
                                                                  std::uint64_t master_seed,
                                                                  const CampaignOptions& opts) {
    if (n_sets < 1) throw config_error("single_problem_sweep: n_sets must be >= 1");
    ranges.validate();

    std::vector<std::pair<ParameterSet, double>> results(static_cast<std::size_t>(n_sets));
    ordered_parallel_for<std::pair<ParameterSet, double>>(
        static_cast<std::size_t>(n_sets), opts.workers,
        [&](std::size_t i) { return sweep_trial(problem, ranges, i, master_seed, opts.run); },
        [&](std::size_t i, std::pair<ParameterSet, double>&& r) {
            results[i] = std::move(r);
            return true;
        });

    std::stable_sort(results.begin(), results.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return results;
}

} // namespace evoparam

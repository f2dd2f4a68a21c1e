#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "evoparam/engine.hpp"
#include "evoparam/metrics.hpp"
#include "evoparam/params.hpp"
#include "evoparam/problems.hpp"

namespace evoparam {

// One random-search trial: a sampled parameter set, its per-problem best
// fitnesses, and whether it met the joint criterion. `error` is non-empty
// when an engine failure flagged the record.
struct CampaignRecord {
    int trial = -1;
    ParameterSet params;
    std::map<std::string, double> per_problem_fitness;
    std::map<std::string, std::uint64_t> seeds;
    bool success = false;
    std::string error;
};

struct CampaignOptions {
    int workers = 1; // concurrent trials, records delivered in trial order
    RunOptions run;
    // Streaming sink, called in trial order; returning false stops the
    // campaign after a clean prefix of records.
    std::function<bool(const CampaignRecord&)> on_record;
    // Trials whose records already exist (resume); they are skipped without
    // recomputation. Per-trial seeding makes the remaining records identical
    // to an uninterrupted run.
    std::vector<int> skip_trials;
};

// Trial i samples a ParameterSet with seed derive_seed(master, i), launches
// one GP run per problem, and scores the joint criterion. Deterministic
// under a fixed master seed; engine failures flag the record and the
// campaign continues.
std::vector<CampaignRecord> run_campaign(const std::vector<Problem>& problems,
                                         const ParameterRanges& ranges,
                                         const SuccessCriterion& criterion, int n_trials,
                                         std::uint64_t master_seed,
                                         const CampaignOptions& opts = {});

struct BaselineOutcome {
    std::int64_t solutions_tested = 0;   // candidates examined
    std::int64_t passes = 0;             // candidates that met every threshold
    std::int64_t programs_generated = 0; // early exit keeps this below tested x problems
    int multiplier = 1;                  // drawn uniformly from [1, multiplier_max]
};

// Random-solution oracle: draws pop_size x generations x multiplier
// candidates from the engines' generation-zero samplers and checks each
// against the joint criterion, abandoning a candidate at the first problem
// it fails.
BaselineOutcome random_baseline(const ParameterSet& params, const std::vector<Problem>& problems,
                                const SuccessCriterion& criterion, int multiplier_max,
                                std::uint64_t seed);

// One sweep trial: set index i samples with seed derive_seed(master, i) and
// runs the problem once. Shared by single_problem_sweep and the harness.
std::pair<ParameterSet, double> sweep_trial(const Problem& problem, const ParameterRanges& ranges,
                                            std::size_t set_index, std::uint64_t master_seed,
                                            const RunOptions& run_opts = {});

// n_sets independent (parameter set, GP run) pairs for one problem, sorted
// by best fitness descending.
std::vector<std::pair<ParameterSet, double>> single_problem_sweep(const Problem& problem,
                                                                  const ParameterRanges& ranges,
                                                                  int n_sets,
                                                                  std::uint64_t master_seed,
                                                                  const CampaignOptions& opts = {});

} // namespace evoparam

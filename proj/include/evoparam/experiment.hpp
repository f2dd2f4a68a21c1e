#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evoparam/meta_tuner.hpp"
#include "evoparam/metrics.hpp"
#include "evoparam/params.hpp"
#include "evoparam/problems.hpp"

namespace evoparam {

// Config-level description of one benchmark problem. Relative asset paths
// resolve against the config file's directory at load time.
struct ProblemSpec {
    std::string kind; // quartic | parity | multiplexer | ant | csv
    double threshold = 0.97;
    int points = 20; // quartic
    double lo = -1.0;
    double hi = 1.0;
    int bits = 5;          // parity
    int addr_bits = 2;     // multiplexer
    std::string path;      // ant trail / csv file (absolute after load)
    std::string label = "label"; // csv label column (name or digit index)
    std::string engine;    // csv only: "stack" (default) or "tree"
    double holdout = 0.0;  // csv only: per-class holdout fraction
    int step_budget = 600; // ant

    Problem build() const;
    nlohmann::json to_json() const;
    static ProblemSpec from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
};

struct ExperimentConfig {
    std::string name = "experiment";
    std::string mode = "random"; // random | sweep | meta | baseline
    std::vector<ProblemSpec> problems;
    ParameterRanges ranges;
    MetaConfig meta;
    int n_trials = 1; // random: trials; sweep: sets per problem
    std::uint64_t seed = 0;

    // baseline mode
    std::string source_results; // campaign file supplying successful sets
    int baseline_top = 3;
    int multiplier_max = 3;

    // Execution details; not part of the experiment identity echoed into
    // results headers, so resuming with a different worker count or output
    // directory yields byte-identical records.
    int workers = 1;
    int eval_threads = 1;
    bool stop_when_perfect = true;
    std::filesystem::path out_dir = ".";

    static ExperimentConfig load(const std::filesystem::path& file);
    static ExperimentConfig from_json(const nlohmann::json& j,
                                      const std::filesystem::path& base_dir);

    nlohmann::json identity_json() const; // header payload, compared on resume
    std::filesystem::path results_path() const;
    std::vector<Problem> build_problems() const;
    SuccessCriterion criterion() const;
    void validate() const;
};

struct ExperimentSummary {
    std::string mode;
    std::filesystem::path results_path;
    std::int64_t total = 0;     // trial/generation/set records in the file
    std::int64_t successes = 0; // campaign successes
    double yield_pct = 0.0;
    int records_written = 0; // new records this invocation
    bool resumed = false;
    std::int64_t solutions_tested = 0; // baseline mode
    std::int64_t passes = 0;           // baseline mode
};

// Test hook: stop after writing N new records, leaving a resumable prefix.
struct RunLimits {
    std::optional<std::size_t> stop_after_records;
};

// Dispatches on config.mode, streams records to an append-only results file
// and finishes with a summary line. Safe to interrupt; rerunning skips
// completed trial indices and produces a file identical to an uninterrupted
// run.
ExperimentSummary run_experiment(const ExperimentConfig& config, const RunLimits& limits = {});

// Human-readable digest: total runs, success count, yield, per-problem
// fitness quantiles. Corrupt lines are skipped with a warning count.
std::string summarize(const std::filesystem::path& results_path);

// Figure-style SVG emission; axis ranges come from the campaign config, not
// the data extent. Returns the files written.
std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& results_path,
                                              const std::filesystem::path& out_dir);

} // namespace evoparam

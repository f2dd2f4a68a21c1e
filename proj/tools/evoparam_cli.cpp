// Batch CLI for parameter-space experiments: random-search campaigns, the
// meta-GA tuner, single-problem sweeps, the random-solution baseline, plus
// summaries and figure-style SVG plots over persisted result files.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "evoparam/errors.hpp"
#include "evoparam/experiment.hpp"
#include "evoparam/records.hpp"

namespace fs = std::filesystem;
using namespace evoparam;

namespace {

void print_summary(const ExperimentSummary& s) {
    std::cout << "results: " << s.results_path.string() << "\n";
    if (s.resumed) std::cout << "resumed; " << s.records_written << " new record(s)\n";
    if (s.mode == "baseline") {
        std::cout << "sets " << s.total << ", solutions tested " << s.solutions_tested
                  << ", passes " << s.passes << "\n";
    } else if (s.mode == "meta") {
        std::cout << "generations " << s.total << "\n";
    } else {
        std::cout << "total " << s.total << ", successes " << s.successes;
        if (s.total > 0 && s.mode == "random") {
            char buf[32];
            std::snprintf(buf, sizeof(buf), ", yield %.1f%%", s.yield_pct);
            std::cout << buf;
        }
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evoparam - exploring the hyper-parameter space of evolutionary algorithms"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run an experiment described by a JSON config");
    std::string config_path;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> workers_override;
    std::optional<std::string> out_override;
    run->add_option("--config", config_path, "experiment config (JSON)")->required();
    run->add_option("--seed", seed_override, "override the master seed");
    run->add_option("--workers", workers_override, "override the worker count");
    run->add_option("--out", out_override, "override the output directory");

    // summarize
    auto* summ = app.add_subcommand("summarize", "print totals and fitness quantiles");
    std::string summ_results;
    summ->add_option("results", summ_results, "results file (.jsonl)")->required();

    // plot
    auto* plot = app.add_subcommand("plot", "emit figure-style SVG plots");
    std::string plot_results, plot_out = ".";
    plot->add_option("results", plot_results, "results file (.jsonl)")->required();
    plot->add_option("--out", plot_out, "output directory for SVG files");

    // baseline
    auto* base = app.add_subcommand(
        "baseline", "random-solution baseline over a campaign's top successful sets");
    std::string base_results;
    int base_top = 3;
    int base_mult = 3;
    std::uint64_t base_seed = 0;
    int base_workers = 1;
    std::optional<std::string> base_out;
    base->add_option("results", base_results, "campaign results file (.jsonl)")->required();
    base->add_option("--top", base_top, "number of top successful sets to test");
    base->add_option("--multiplier-max", base_mult, "upper bound of the [1,k] multiplier");
    base->add_option("--seed", base_seed, "baseline master seed");
    base->add_option("--workers", base_workers, "concurrent baseline sets");
    base->add_option("--out", base_out, "output directory (default: alongside the results)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            ExperimentConfig config = ExperimentConfig::load(config_path);
            if (seed_override) config.seed = *seed_override;
            if (workers_override) config.workers = *workers_override;
            if (out_override) config.out_dir = fs::absolute(*out_override).lexically_normal();
            print_summary(run_experiment(config));
        } else if (*summ) {
            std::cout << summarize(summ_results);
        } else if (*plot) {
            const auto files = emit_plots(plot_results, plot_out);
            for (const auto& f : files) std::cout << f.string() << "\n";
            if (files.empty()) std::cout << "no plots for this result kind\n";
        } else if (*base) {
            const fs::path source = fs::absolute(base_results).lexically_normal();
            const ResultsFile rf = ResultsFile::load(source, /*strict=*/false);
            ExperimentConfig config;
            config.name = rf.config().value("name", std::string("campaign")) + "_baseline";
            config.mode = "baseline";
            config.source_results = source.string();
            config.baseline_top = base_top;
            config.multiplier_max = base_mult;
            config.seed = base_seed;
            config.workers = base_workers;
            config.out_dir =
                base_out ? fs::absolute(*base_out).lexically_normal() : source.parent_path();
            print_summary(run_experiment(config));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

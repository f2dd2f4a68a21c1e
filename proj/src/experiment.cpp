#include "evoparam/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>

#include "evoparam/dataset.hpp"
#include "evoparam/errors.hpp"
#include "evoparam/random_tuner.hpp"
#include "evoparam/records.hpp"
#include "evoparam/svg_plot.hpp"
#include "evoparam/worker_pool.hpp"

namespace evoparam {

namespace {

std::string resolve_path(const std::string& p, const std::filesystem::path& base_dir) {
    if (p.empty()) return p;
    std::filesystem::path fp(p);
    if (fp.is_relative()) fp = base_dir / fp;
    return fp.lexically_normal().string();
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return out;
}

} // namespace

Problem ProblemSpec::build() const {
    if (kind == "quartic") return make_quartic_problem(points, lo, hi, threshold);
    if (kind == "parity") return make_parity_problem(bits, threshold);
    if (kind == "multiplexer") return make_multiplexer_problem(addr_bits, threshold);
    if (kind == "ant") return make_ant_problem(AntTrail::load(path, step_budget), threshold);
    if (kind == "csv")
        return make_classification_problem(load_csv_dataset(path, label),
                                           engine == "tree" ? EngineKind::Tree : EngineKind::Stack,
                                           threshold, holdout);
    throw config_error("unknown problem kind '" + kind + "'");
}

nlohmann::json ProblemSpec::to_json() const {
    nlohmann::json j{{"kind", kind}, {"threshold", threshold}};
    if (kind == "quartic") {
        j["points"] = points;
        j["lo"] = lo;
        j["hi"] = hi;
    } else if (kind == "parity") {
        j["bits"] = bits;
    } else if (kind == "multiplexer") {
        j["addr_bits"] = addr_bits;
    } else if (kind == "ant") {
        j["path"] = path;
        j["step_budget"] = step_budget;
    } else if (kind == "csv") {
        j["path"] = path;
        j["label"] = label;
        j["engine"] = engine.empty() ? "stack" : engine;
        j["holdout"] = holdout;
    }
    return j;
}

ProblemSpec ProblemSpec::from_json(const nlohmann::json& j,
                                   const std::filesystem::path& base_dir) {
    ProblemSpec s;
    s.kind = j.at("kind").get<std::string>();
    s.threshold = j.value("threshold", 0.97);
    s.points = j.value("points", 20);
    s.lo = j.value("lo", -1.0);
    s.hi = j.value("hi", 1.0);
    s.bits = j.value("bits", 5);
    s.addr_bits = j.value("addr_bits", 2);
    s.path = resolve_path(j.value("path", ""), base_dir);
    s.label = j.value("label", std::string("label"));
    s.engine = j.value("engine", std::string());
    s.holdout = j.value("holdout", 0.0);
    s.step_budget = j.value("step_budget", 600);
    if (!s.engine.empty() && s.engine != "tree" && s.engine != "stack")
        throw config_error("problem engine must be 'tree' or 'stack'");
    return s;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ingest_error("cannot open config '" + file.string() + "'");
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw ingest_error("config '" + file.string() + "' is not valid JSON");
    return from_json(j, file.has_parent_path() ? file.parent_path()
                                               : std::filesystem::current_path());
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j,
                                             const std::filesystem::path& base_dir) {
    ExperimentConfig c;
    c.name = j.value("name", std::string("experiment"));
    c.mode = j.value("mode", std::string("random"));
    if (j.contains("problems"))
        for (const auto& pj : j.at("problems"))
            c.problems.push_back(ProblemSpec::from_json(pj, base_dir));
    if (j.contains("ranges")) c.ranges = ranges_from_json(j.at("ranges"));
    if (j.contains("meta")) {
        const auto& m = j.at("meta");
        c.meta.pop_size = m.value("pop_size", c.meta.pop_size);
        c.meta.generations = m.value("generations", c.meta.generations);
        c.meta.tournament_size = m.value("tournament_size", c.meta.tournament_size);
        c.meta.crossover_prob = m.value("crossover_prob", c.meta.crossover_prob);
        c.meta.mutation_prob = m.value("mutation_prob", c.meta.mutation_prob);
        c.meta.elitism_fraction = m.value("elitism_fraction", c.meta.elitism_fraction);
        c.meta.weight_update_period = m.value("weight_update_period", c.meta.weight_update_period);
        if (m.contains("genome_ranges"))
            c.meta.genome_ranges = ranges_from_json(m.at("genome_ranges"));
    }
    c.n_trials = j.value("n_trials", 1);
    c.seed = j.value("seed", std::uint64_t{0});
    c.source_results = resolve_path(j.value("source_results", ""), base_dir);
    c.baseline_top = j.value("baseline_top", 3);
    c.multiplier_max = j.value("multiplier_max", 3);
    c.workers = j.value("workers", 1);
    c.eval_threads = j.value("eval_threads", 1);
    c.stop_when_perfect = j.value("stop_when_perfect", true);
    c.out_dir = resolve_path(j.value("out_dir", "."), base_dir);
    return c;
}

nlohmann::json ExperimentConfig::identity_json() const {
    nlohmann::json j{{"name", name}, {"mode", mode}, {"seed", seed}};
    if (mode == "baseline") {
        j["source_results"] = source_results;
        j["baseline_top"] = baseline_top;
        j["multiplier_max"] = multiplier_max;
        return j;
    }
    nlohmann::json specs = nlohmann::json::array();
    for (const auto& s : problems) specs.push_back(s.to_json());
    j["problems"] = specs;
    j["n_trials"] = n_trials;
    if (mode == "meta") {
        j["meta"] = {{"pop_size", meta.pop_size},
                     {"generations", meta.generations},
                     {"tournament_size", meta.tournament_size},
                     {"crossover_prob", meta.crossover_prob},
                     {"mutation_prob", meta.mutation_prob},
                     {"elitism_fraction", meta.elitism_fraction},
                     {"weight_update_period", meta.weight_update_period},
                     {"genome_ranges", ranges_to_json(meta.genome_ranges)}};
    } else {
        j["ranges"] = ranges_to_json(ranges);
    }
    return j;
}

std::filesystem::path ExperimentConfig::results_path() const {
    return out_dir / (sanitize(name) + ".jsonl");
}

std::vector<Problem> ExperimentConfig::build_problems() const {
    std::vector<Problem> out;
    std::set<std::string> names;
    for (const auto& s : problems) {
        out.push_back(s.build());
        if (!names.insert(out.back().name).second)
            throw config_error("duplicate problem name '" + out.back().name + "'");
    }
    return out;
}

SuccessCriterion ExperimentConfig::criterion() const {
    SuccessCriterion c;
    for (const auto& p : build_problems()) c.thresholds[p.name] = p.success_threshold;
    return c;
}

void ExperimentConfig::validate() const {
    if (mode != "random" && mode != "sweep" && mode != "meta" && mode != "baseline")
        throw config_error("unknown mode '" + mode + "'");
    if (mode == "baseline") {
        if (source_results.empty()) throw config_error("baseline mode needs source_results");
        if (baseline_top < 1) throw config_error("baseline_top must be >= 1");
        if (multiplier_max < 1) throw config_error("multiplier_max must be >= 1");
    } else {
        if (problems.empty()) throw config_error("mode '" + mode + "' needs problems");
        if (n_trials < 1) throw config_error("n_trials must be >= 1");
        if (mode == "meta")
            meta.validate();
        else
            ranges.validate();
    }
    if (workers < 1) throw config_error("workers must be >= 1");
    if (eval_threads < 1) throw config_error("eval_threads must be >= 1");
}

namespace {

// Indices already present must form the prefix 0..k-1 (the writer emits in
// index order and crashes leave a clean prefix).
std::size_t verify_prefix(const std::vector<nlohmann::json>& records, const char* index_key,
                          const std::filesystem::path& path) {
    std::vector<std::int64_t> idx;
    for (const auto& r : records) idx.push_back(r.at(index_key).get<std::int64_t>());
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (idx[i] != static_cast<std::int64_t>(i))
            throw config_error("'" + path.string() +
                               "' is not a clean record prefix; refusing to resume");
    return idx.size();
}

struct ResumeState {
    bool resumed = false;
    std::size_t existing = 0; // records already present
    bool complete = false;    // summary already present
};

ResumeState open_results(const ExperimentConfig& config, const std::filesystem::path& path,
                         const char* index_key) {
    ResumeState st;
    if (!std::filesystem::exists(path) || std::filesystem::file_size(path) == 0) return st;
    ResultsFile rf = ResultsFile::load(path, /*strict=*/true);
    if (rf.config() != config.identity_json())
        throw config_error("'" + path.string() + "' belongs to a different experiment");
    st.resumed = true;
    st.existing = verify_prefix(rf.records, index_key, path);
    st.complete = rf.summary.has_value();
    return st;
}

nlohmann::json header_json(const ExperimentConfig& config) {
    return {{"type", "header"}, {"schema", kRecordSchema}, {"config", config.identity_json()}};
}

ExperimentSummary finish_campaign(const ExperimentConfig& config,
                                  const std::filesystem::path& path, int written, bool resumed,
                                  bool complete) {
    ResultsFile rf = ResultsFile::load(path, /*strict=*/true);
    ExperimentSummary s;
    s.mode = config.mode;
    s.results_path = path;
    s.records_written = written;
    s.resumed = resumed;
    s.total = static_cast<std::int64_t>(rf.records.size());
    for (const auto& r : rf.records) {
        if (r.value("success", false)) ++s.successes;
        s.solutions_tested += r.value("solutions_tested", std::int64_t{0});
        s.passes += r.value("passes", std::int64_t{0});
    }
    if (s.total > 0) s.yield_pct = 100.0 * static_cast<double>(s.successes) /
                                   static_cast<double>(s.total);
    if (complete && !rf.summary) {
        nlohmann::json summary{{"type", "summary"}, {"total", s.total}};
        if (config.mode == "random") {
            summary["successes"] = s.successes;
            summary["yield_pct"] = s.yield_pct;
        } else if (config.mode == "baseline") {
            summary["solutions_tested"] = s.solutions_tested;
            summary["passes"] = s.passes;
        }
        RecordWriter w(path, /*append=*/true);
        w.write(summary);
    }
    return s;
}

ExperimentSummary run_random_mode(const ExperimentConfig& config, const RunLimits& limits) {
    const auto path = config.results_path();
    const ResumeState st = open_results(config, path, "trial");
    if (st.complete) return finish_campaign(config, path, 0, true, true);

    const std::vector<Problem> problems = config.build_problems();
    SuccessCriterion criterion;
    for (const auto& p : problems) criterion.thresholds[p.name] = p.success_threshold;

    RecordWriter writer(path, /*append=*/st.resumed);
    if (!st.resumed) writer.write(header_json(config));

    CampaignOptions opts;
    opts.workers = config.workers;
    opts.run.eval_threads = config.eval_threads;
    opts.run.stop_when_perfect = config.stop_when_perfect;
    for (std::size_t t = 0; t < st.existing; ++t) opts.skip_trials.push_back(static_cast<int>(t));

    int written = 0;
    bool stopped = false;
    opts.on_record = [&](const CampaignRecord& rec) {
        writer.write(campaign_record_to_json(rec));
        ++written;
        if (limits.stop_after_records && written >= static_cast<int>(*limits.stop_after_records)) {
            stopped = true;
            return false;
        }
        return true;
    };
    run_campaign(problems, config.ranges, criterion, config.n_trials, config.seed, opts);
    return finish_campaign(config, path, written, st.resumed, !stopped);
}

ExperimentSummary run_sweep_mode(const ExperimentConfig& config, const RunLimits& limits) {
    const auto path = config.results_path();
    const ResumeState st = open_results(config, path, "trial");
    if (st.complete) return finish_campaign(config, path, 0, true, true);

    const std::vector<Problem> problems = config.build_problems();
    const auto sets = static_cast<std::size_t>(config.n_trials);
    const std::size_t total = problems.size() * sets;

    RecordWriter writer(path, /*append=*/st.resumed);
    if (!st.resumed) writer.write(header_json(config));

    std::vector<std::size_t> todo;
    for (std::size_t t = st.existing; t < total; ++t) todo.push_back(t);

    int written = 0;
    bool stopped = false;
    ordered_parallel_for<nlohmann::json>(
        todo.size(), config.workers,
        [&](std::size_t i) {
            const std::size_t t = todo[i];
            const std::size_t p = t / sets;
            const std::size_t s = t % sets;
            const std::uint64_t sweep_seed = derive_seed(config.seed, p);
            RunOptions run_opts;
            run_opts.eval_threads = config.eval_threads;
            run_opts.stop_when_perfect = config.stop_when_perfect;
            const auto [params, fitness] =
                sweep_trial(problems[p], config.ranges, s, sweep_seed, run_opts);
            return nlohmann::json{{"type", "trial"},
                                  {"trial", t},
                                  {"problem", problems[p].name},
                                  {"set", s},
                                  {"params", params_to_json(params)},
                                  {"fitness", fitness},
                                  {"seed", derive_seed(derive_seed(sweep_seed, s), 0)}};
        },
        [&](std::size_t, nlohmann::json&& rec) {
            writer.write(rec);
            ++written;
            if (limits.stop_after_records &&
                written >= static_cast<int>(*limits.stop_after_records)) {
                stopped = true;
                return false;
            }
            return true;
        });
    return finish_campaign(config, path, written, st.resumed, !stopped);
}

ExperimentSummary run_meta_mode(const ExperimentConfig& config, const RunLimits& limits) {
    const auto path = config.results_path();
    const ResumeState st = open_results(config, path, "generation");
    if (st.complete) return finish_campaign(config, path, 0, true, true);

    const std::vector<Problem> problems = config.build_problems();

    RecordWriter writer(path, /*append=*/st.resumed);
    if (!st.resumed) writer.write(header_json(config));

    // The meta loop is sequential and stateful, so resuming recomputes the
    // run deterministically and appends only the missing generation records.
    MetaRunOptions opts;
    opts.workers = config.workers;
    opts.run.eval_threads = config.eval_threads;
    opts.run.stop_when_perfect = config.stop_when_perfect;

    int written = 0;
    bool stopped = false;
    double final_best = 0.0;
    opts.on_generation = [&](const MetaGenerationRecord& rec) {
        final_best = rec.best_fitness;
        if (static_cast<std::size_t>(rec.generation) < st.existing) return true;
        nlohmann::json weights_json(rec.weights.weights);
        writer.write(nlohmann::json{{"type", "generation"},
                                    {"generation", rec.generation},
                                    {"best_params", params_to_json(rec.best)},
                                    {"best_fitness", rec.best_fitness},
                                    {"weights", weights_json}});
        ++written;
        if (limits.stop_after_records && written >= static_cast<int>(*limits.stop_after_records)) {
            stopped = true;
            return false;
        }
        return true;
    };
    run_meta_ga(problems, config.meta, config.seed, opts);

    ExperimentSummary s = finish_campaign(config, path, written, st.resumed, false);
    if (!stopped) {
        nlohmann::json summary{
            {"type", "summary"}, {"total", s.total}, {"best_fitness", final_best}};
        RecordWriter w(path, /*append=*/true);
        w.write(summary);
    }
    return s;
}

ExperimentSummary run_baseline_mode(const ExperimentConfig& config, const RunLimits& limits) {
    const auto path = config.results_path();
    const ResumeState st = open_results(config, path, "index");
    if (st.complete) return finish_campaign(config, path, 0, true, true);

    const ResultsFile source = ResultsFile::load(config.source_results, /*strict=*/false);
    if (source.mode() != "random")
        throw config_error("baseline source '" + config.source_results +
                           "' is not a random-search campaign");
    const ExperimentConfig source_config =
        ExperimentConfig::from_json(source.config(), std::filesystem::path("."));
    const std::vector<Problem> problems = source_config.build_problems();
    SuccessCriterion criterion;
    for (const auto& p : problems) criterion.thresholds[p.name] = p.success_threshold;

    // Successful sets ranked by mean fitness, stable by trial order.
    struct Source {
        int trial;
        ParameterSet params;
        double mean;
    };
    std::vector<Source> successes;
    for (const auto& rec : source.records) {
        if (!rec.value("success", false)) continue;
        const CampaignRecord cr = campaign_record_from_json(rec);
        double mean = 0.0;
        for (const auto& [name, f] : cr.per_problem_fitness) mean += f;
        mean /= static_cast<double>(cr.per_problem_fitness.size());
        successes.push_back({cr.trial, cr.params, mean});
    }
    std::stable_sort(successes.begin(), successes.end(),
                     [](const Source& a, const Source& b) { return a.mean > b.mean; });
    if (successes.size() > static_cast<std::size_t>(config.baseline_top))
        successes.resize(static_cast<std::size_t>(config.baseline_top));

    RecordWriter writer(path, /*append=*/st.resumed);
    if (!st.resumed) writer.write(header_json(config));

    std::vector<std::size_t> todo;
    for (std::size_t i = st.existing; i < successes.size(); ++i) todo.push_back(i);

    int written = 0;
    bool stopped = false;
    ordered_parallel_for<nlohmann::json>(
        todo.size(), config.workers,
        [&](std::size_t k) {
            const std::size_t i = todo[k];
            const auto& src = successes[i];
            const BaselineOutcome out =
                random_baseline(src.params, problems, criterion, config.multiplier_max,
                                derive_seed(config.seed, static_cast<std::uint64_t>(src.trial)));
            return nlohmann::json{{"type", "baseline"},
                                  {"index", i},
                                  {"source_trial", src.trial},
                                  {"params", params_to_json(src.params)},
                                  {"multiplier", out.multiplier},
                                  {"solutions_tested", out.solutions_tested},
                                  {"programs_generated", out.programs_generated},
                                  {"passes", out.passes}};
        },
        [&](std::size_t, nlohmann::json&& rec) {
            writer.write(rec);
            ++written;
            if (limits.stop_after_records &&
                written >= static_cast<int>(*limits.stop_after_records)) {
                stopped = true;
                return false;
            }
            return true;
        });
    return finish_campaign(config, path, written, st.resumed, !stopped);
}

} // namespace

ExperimentSummary run_experiment(const ExperimentConfig& config, const RunLimits& limits) {
    config.validate();
    std::filesystem::create_directories(config.out_dir);
    if (config.mode == "random") return run_random_mode(config, limits);
    if (config.mode == "sweep") return run_sweep_mode(config, limits);
    if (config.mode == "meta") return run_meta_mode(config, limits);
    return run_baseline_mode(config, limits);
}

namespace {

std::string format_pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", v);
    return buf;
}

std::string format_f(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// Nearest-rank quantile over a sorted ascending vector.
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const auto idx = static_cast<std::size_t>(
        std::lround(p * static_cast<double>(sorted.size() - 1)));
    return sorted[idx];
}

std::string quantile_line(const std::string& name, std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return name + ": min " + format_f(quantile_sorted(values, 0.0)) + ", p25 " +
           format_f(quantile_sorted(values, 0.25)) + ", median " +
           format_f(quantile_sorted(values, 0.5)) + ", p75 " +
           format_f(quantile_sorted(values, 0.75)) + ", max " +
           format_f(quantile_sorted(values, 1.0));
}

} // namespace

std::string summarize(const std::filesystem::path& results_path) {
    const ResultsFile rf = ResultsFile::load(results_path, /*strict=*/false);
    const std::string mode = rf.mode();
    std::string out;

    if (mode == "baseline") {
        std::int64_t solutions = 0, programs = 0, passes = 0;
        for (const auto& r : rf.records) {
            solutions += r.value("solutions_tested", std::int64_t{0});
            programs += r.value("programs_generated", std::int64_t{0});
            passes += r.value("passes", std::int64_t{0});
        }
        out = "sets " + std::to_string(rf.records.size()) + ", solutions tested " +
              std::to_string(solutions) + ", programs generated " + std::to_string(programs) +
              ", passes " + std::to_string(passes) + "\n";
    } else if (mode == "meta") {
        double best = 0.0;
        for (const auto& r : rf.records) best = std::max(best, r.value("best_fitness", 0.0));
        out = "total " + std::to_string(rf.records.size()) + " generations, best fitness " +
              format_f(best) + "\n";
    } else {
        std::int64_t total = static_cast<std::int64_t>(rf.records.size());
        std::int64_t successes = 0;
        std::map<std::string, std::vector<double>> per_problem;
        for (const auto& r : rf.records) {
            if (r.value("success", false)) ++successes;
            if (r.contains("fitness") && r.at("fitness").is_object()) {
                for (const auto& [name, f] : r.at("fitness").items())
                    per_problem[name].push_back(f.get<double>());
            } else if (r.contains("fitness") && r.contains("problem")) {
                per_problem[r.at("problem").get<std::string>()].push_back(
                    r.at("fitness").get<double>());
            }
        }
        out = "total " + std::to_string(total) + ", successes " + std::to_string(successes);
        if (total > 0 && mode == "random")
            out += ", yield " + format_pct(100.0 * static_cast<double>(successes) /
                                           static_cast<double>(total));
        out += "\n";
        for (const auto& [name, values] : per_problem)
            out += quantile_line(name, values) + "\n";
    }
    if (rf.corrupt_lines > 0)
        out += "skipped " + std::to_string(rf.corrupt_lines) + " corrupt line(s)\n";
    return out;
}

std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& results_path,
                                              const std::filesystem::path& out_dir) {
    const ResultsFile rf = ResultsFile::load(results_path, /*strict=*/false);
    const std::string mode = rf.mode();
    const ExperimentConfig config =
        ExperimentConfig::from_json(rf.config(), std::filesystem::path("."));
    std::filesystem::create_directories(out_dir);
    const std::string stem = sanitize(config.name);
    std::vector<std::filesystem::path> written;

    if (mode == "random") {
        std::vector<double> pop, gen, tour;
        std::vector<std::pair<double, double>> pop_gen, xo_mu;
        for (const auto& r : rf.records) {
            if (!r.value("success", false)) continue;
            const ParameterSet p = params_from_json(r.at("params"));
            pop.push_back(p.pop_size);
            gen.push_back(p.generations);
            tour.push_back(p.tournament_size);
            pop_gen.emplace_back(p.pop_size, p.generations);
            xo_mu.emplace_back(p.crossover_rate, p.mutation_rate);
        }
        const auto& rg = config.ranges;
        const std::string note = "no successful sets";
        svg::Axis ax_pop{static_cast<double>(rg.pop_size.lo), static_cast<double>(rg.pop_size.hi),
                         "population size"};
        svg::Axis ax_gen{static_cast<double>(rg.generations.lo),
                         static_cast<double>(rg.generations.hi), "generation count"};
        svg::Axis ax_xo{rg.crossover_rate.lo, rg.crossover_rate.hi, "crossover rate"};
        svg::Axis ax_mu{rg.mutation_rate.lo, rg.mutation_rate.hi, "mutation rate"};
        svg::Axis ax_tour{static_cast<double>(rg.tournament_size.lo),
                          static_cast<double>(rg.tournament_size.hi), "tournament size"};

        auto emit_hist = [&](const std::string& kind, const std::vector<double>& v,
                             const svg::Axis& ax, const std::string& title) {
            const auto p = out_dir / (stem + "_" + kind + ".svg");
            svg::write_histogram(p, title, v, ax, 20, note);
            written.push_back(p);
        };
        emit_hist("pop_hist", pop, ax_pop, "successful sets: population size");
        emit_hist("gen_hist", gen, ax_gen, "successful sets: generation count");
        emit_hist("tour_hist", tour, ax_tour, "successful sets: tournament size");

        auto p1 = out_dir / (stem + "_pop_gen_scatter.svg");
        svg::write_scatter(p1, "successful sets: population vs generations", pop_gen, ax_pop,
                           ax_gen, note);
        written.push_back(p1);
        auto p2 = out_dir / (stem + "_xo_mu_scatter.svg");
        svg::write_scatter(p2, "successful sets: crossover vs mutation", xo_mu, ax_xo, ax_mu,
                           note);
        written.push_back(p2);
    } else if (mode == "sweep") {
        std::map<std::string, std::vector<double>> per_problem;
        for (const auto& r : rf.records)
            per_problem[r.at("problem").get<std::string>()].push_back(
                r.at("fitness").get<double>());
        for (auto& [name, values] : per_problem) {
            std::sort(values.begin(), values.end(), std::greater<>());
            std::vector<std::pair<double, double>> pts;
            for (std::size_t i = 0; i < values.size(); ++i)
                pts.emplace_back(static_cast<double>(i + 1), values[i]);
            svg::Axis ax{1.0, static_cast<double>(std::max<std::size_t>(values.size(), 2)),
                         "parameter set (sorted by fitness)"};
            svg::Axis ay{0.0, 1.0, "best fitness"};
            const auto p = out_dir / (stem + "_" + sanitize(name) + "_sweep.svg");
            svg::write_line(p, "single-problem sweep: " + name, pts, ax, ay, "no records");
            written.push_back(p);
        }
    } else if (mode == "meta") {
        std::vector<std::pair<double, double>> pts;
        double max_gen = 1.0;
        for (const auto& r : rf.records) {
            const double g = r.at("generation").get<double>();
            pts.emplace_back(g, r.at("best_fitness").get<double>());
            max_gen = std::max(max_gen, g);
        }
        svg::Axis ax{0.0, max_gen, "meta generation"};
        svg::Axis ay{0.0, 1.0, "best-so-far meta fitness"};
        const auto p = out_dir / (stem + "_meta_trace.svg");
        svg::write_line(p, "meta-GA best-so-far fitness", pts, ax, ay, "no records");
        written.push_back(p);
    }
    // baseline files carry no figure-style data
    return written;
}

} // namespace evoparam

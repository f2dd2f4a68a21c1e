#include "evoparam/problems.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "evoparam/centroid.hpp"
#include "evoparam/errors.hpp"
#include "evoparam/metrics.hpp"
#include "evoparam/psets.hpp"

namespace evoparam {

std::size_t Problem::output_dim() const {
    return std::min(data.n_classes(), kOutputDimCap);
}

namespace {

double regression_fitness(const Problem& p, const ProgramTree& tree) {
    double abs_err = 0.0;
    double x[1];
    for (const auto& [xv, yv] : p.points) {
        x[0] = xv;
        abs_err += std::abs(evaluate_tree(tree, p.pset, std::span<const double>(x, 1)) - yv);
    }
    const double mae = abs_err / static_cast<double>(p.points.size());
    if (!std::isfinite(mae)) return 0.0;
    return normalized_fitness(p, mae);
}

// Boolean tables score a 64-row block per tree walk.
double table_fitness_bits(const Problem& p, const ProgramTree& tree) {
    const std::size_t n_features = p.data.n_features;
    std::int64_t correct0 = 0, correct1 = 0, total1 = 0;
    std::int64_t total = 0;
    for (std::size_t b = 0; b < p.bit_labels.size(); ++b) {
        const std::span<const std::uint64_t> inputs(p.bit_features.data() + b * n_features,
                                                    n_features);
        const std::uint64_t out = evaluate_tree_bits(tree, p.pset, inputs);
        const std::uint64_t valid = p.bit_valid[b];
        const std::uint64_t labels = p.bit_labels[b];
        const std::uint64_t good = ~(out ^ labels) & valid;
        correct1 += std::popcount(good & labels);
        correct0 += std::popcount(good & ~labels & valid);
        total1 += std::popcount(labels & valid);
        total += std::popcount(valid);
    }
    const std::int64_t total0 = total - total1;
    return 0.5 * (static_cast<double>(correct0) / static_cast<double>(total0) +
                  static_cast<double>(correct1) / static_cast<double>(total1));
}

double table_fitness(const Problem& p, const ProgramTree& tree) {
    if (!p.bit_labels.empty() && p.pset.bit_evaluable()) return table_fitness_bits(p, tree);
    const bool sign_rule = p.kind == ProblemKind::Classification;
    std::vector<int> predictions, truth;
    predictions.reserve(p.data.n_samples());
    truth.reserve(p.data.n_samples());
    for (std::size_t i = 0; i < p.data.n_samples(); ++i) {
        if (!p.in_train.empty() && !p.in_train[i]) continue;
        const double out = evaluate_tree(tree, p.pset, p.data.row(i));
        predictions.push_back(sign_rule ? (out > 0.0 ? 1 : 0) : (out != 0.0 ? 1 : 0));
        truth.push_back(p.data.labels[i]);
    }
    return balanced_accuracy(predictions, truth, p.data.n_classes());
}

// Packs an exhaustive boolean table into 64-row blocks. Requires binary
// labels sorted as {"0","1"} and 0/1 features, which parity and multiplexer
// datasets guarantee.
void build_bit_tables(Problem& p) {
    const std::size_t n = p.data.n_samples();
    const std::size_t n_features = p.data.n_features;
    const std::size_t blocks = (n + 63) / 64;
    p.bit_features.assign(blocks * n_features, 0);
    p.bit_labels.assign(blocks, 0);
    p.bit_valid.assign(blocks, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t block = i / 64;
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        p.bit_valid[block] |= bit;
        if (p.data.labels[i] == 1) p.bit_labels[block] |= bit;
        const auto row = p.data.row(i);
        for (std::size_t f = 0; f < n_features; ++f)
            if (row[f] != 0.0) p.bit_features[block * n_features + f] |= bit;
    }
}

} // namespace

double Problem::tree_fitness(const ProgramTree& tree) const {
    switch (kind) {
    case ProblemKind::Regression: return regression_fitness(*this, tree);
    case ProblemKind::Parity:
    case ProblemKind::Multiplexer:
    case ProblemKind::Classification: return table_fitness(*this, tree);
    case ProblemKind::Ant:
        return normalized_fitness(*this, static_cast<double>(ant_simulate(tree, pset, trail)));
    }
    throw config_error("corrupt problem kind");
}

double Problem::stack_fitness(const StackProgram& prog) const {
    if (kind != ProblemKind::Classification && kind != ProblemKind::Parity &&
        kind != ProblemKind::Multiplexer)
        throw config_error("problem '" + name + "' has no stack-engine fitness");
    const std::size_t dim = output_dim();
    std::vector<std::vector<double>> outputs;
    std::vector<int> truth;
    for (std::size_t i = 0; i < data.n_samples(); ++i) {
        if (!in_train.empty() && !in_train[i]) continue;
        outputs.push_back(execute_stack(prog, data.row(i), dim));
        truth.push_back(data.labels[i]);
    }
    const CentroidModel model = fit_centroids(outputs, truth, data.n_classes());
    std::vector<int> predictions(outputs.size());
    for (std::size_t i = 0; i < outputs.size(); ++i)
        predictions[i] = classify(model, outputs[i]);
    return balanced_accuracy(predictions, truth, data.n_classes());
}

double Problem::stack_holdout_fitness(const StackProgram& prog) const {
    if (in_train.empty())
        throw config_error("problem '" + name + "' has no holdout split");
    const std::size_t dim = output_dim();
    std::vector<std::vector<double>> train_outputs;
    std::vector<int> train_truth;
    std::vector<std::vector<double>> held_outputs;
    std::vector<int> held_truth;
    for (std::size_t i = 0; i < data.n_samples(); ++i) {
        if (in_train[i]) {
            train_outputs.push_back(execute_stack(prog, data.row(i), dim));
            train_truth.push_back(data.labels[i]);
        } else {
            held_outputs.push_back(execute_stack(prog, data.row(i), dim));
            held_truth.push_back(data.labels[i]);
        }
    }
    const CentroidModel model = fit_centroids(train_outputs, train_truth, data.n_classes());
    std::vector<int> predictions(held_outputs.size());
    for (std::size_t i = 0; i < held_outputs.size(); ++i)
        predictions[i] = classify(model, held_outputs[i]);
    return balanced_accuracy(predictions, held_truth, data.n_classes());
}

std::vector<std::pair<double, double>> quartic_dataset(int n_points, double lo, double hi) {
    if (n_points < 2) throw config_error("quartic dataset needs >= 2 points");
    if (!(lo < hi)) throw config_error("quartic dataset needs lo < hi");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_points - 1);
        pts.emplace_back(x, x * x * x * x + x * x * x + x * x + x);
    }
    return pts;
}

Dataset parity_dataset(int n_bits) {
    if (n_bits < 2 || n_bits > 10)
        throw config_error("parity bit width must be in [2,10]");
    std::vector<std::string> names;
    for (int b = 0; b < n_bits; ++b) names.push_back("b" + std::to_string(b));
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    const unsigned total = 1u << n_bits;
    for (unsigned v = 0; v < total; ++v) {
        std::vector<double> row(static_cast<std::size_t>(n_bits));
        for (int b = 0; b < n_bits; ++b) row[static_cast<std::size_t>(b)] = (v >> b) & 1u;
        rows.push_back(std::move(row));
        labels.emplace_back(std::popcount(v) % 2 == 0 ? "1" : "0"); // "1" = even
    }
    return make_dataset("parity" + std::to_string(n_bits), std::move(names), rows, labels);
}

Dataset multiplexer_dataset(int addr_bits) {
    if (addr_bits != 2 && addr_bits != 3)
        throw config_error("multiplexer address width must be 2 or 3");
    const int n_lines = 1 << addr_bits;
    const int n_inputs = addr_bits + n_lines;
    std::vector<std::string> names;
    for (int a = 0; a < addr_bits; ++a) names.push_back("a" + std::to_string(a));
    for (int d = 0; d < n_lines; ++d) names.push_back("d" + std::to_string(d));
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    const unsigned total = 1u << n_inputs;
    for (unsigned v = 0; v < total; ++v) {
        std::vector<double> row(static_cast<std::size_t>(n_inputs));
        for (int b = 0; b < n_inputs; ++b) row[static_cast<std::size_t>(b)] = (v >> b) & 1u;
        const unsigned address = v & ((1u << addr_bits) - 1u);
        const unsigned selected = (v >> (addr_bits + static_cast<int>(address))) & 1u;
        rows.push_back(std::move(row));
        labels.emplace_back(selected ? "1" : "0");
    }
    return make_dataset("mux" + std::to_string(n_inputs), std::move(names), rows, labels);
}

double normalized_fitness(const Problem& problem, double raw_outcome) {
    switch (problem.kind) {
    case ProblemKind::Regression:
        if (raw_outcome < 0.0) throw config_error("regression MAE must be >= 0");
        return 1.0 / (1.0 + raw_outcome);
    case ProblemKind::Parity:
    case ProblemKind::Multiplexer:
    case ProblemKind::Classification:
        if (raw_outcome < 0.0 || raw_outcome > 1.0)
            throw config_error("balanced accuracy outside [0,1]");
        return raw_outcome;
    case ProblemKind::Ant:
        if (raw_outcome < 0.0 || raw_outcome > problem.trail.food_total)
            throw config_error("food count outside [0, food_total]");
        return raw_outcome / static_cast<double>(problem.trail.food_total);
    }
    throw config_error("corrupt problem kind");
}

namespace {

void check_threshold(double threshold) {
    if (threshold < 0.0 || threshold > 1.0)
        throw config_error("success threshold outside [0,1]");
}

} // namespace

Problem make_quartic_problem(int n_points, double lo, double hi, double threshold) {
    check_threshold(threshold);
    Problem p;
    p.kind = ProblemKind::Regression;
    p.engine = EngineKind::Tree;
    p.name = "quartic";
    p.success_threshold = threshold;
    p.pset = psets::arithmetic({"x"});
    p.points = quartic_dataset(n_points, lo, hi);
    return p;
}

Problem make_parity_problem(int n_bits, double threshold) {
    check_threshold(threshold);
    Problem p;
    p.kind = ProblemKind::Parity;
    p.engine = EngineKind::Tree;
    p.success_threshold = threshold;
    p.pset = psets::parity(n_bits);
    p.data = parity_dataset(n_bits);
    p.name = p.data.name;
    build_bit_tables(p);
    return p;
}

Problem make_multiplexer_problem(int addr_bits, double threshold) {
    check_threshold(threshold);
    Problem p;
    p.kind = ProblemKind::Multiplexer;
    p.engine = EngineKind::Tree;
    p.success_threshold = threshold;
    p.pset = psets::multiplexer(addr_bits);
    p.data = multiplexer_dataset(addr_bits);
    p.name = p.data.name;
    build_bit_tables(p);
    return p;
}

Problem make_ant_problem(AntTrail trail, double threshold) {
    check_threshold(threshold);
    if (trail.food_total < 1) throw config_error("ant trail has no food");
    Problem p;
    p.kind = ProblemKind::Ant;
    p.engine = EngineKind::Tree;
    p.name = "ant";
    p.success_threshold = threshold;
    p.pset = psets::ant();
    p.trail = std::move(trail);
    return p;
}

Problem make_classification_problem(Dataset dataset, EngineKind engine, double threshold,
                                    double holdout_fraction) {
    check_threshold(threshold);
    if (dataset.n_classes() < 2)
        throw config_error("classification dataset '" + dataset.name + "' has a single class");
    if (engine == EngineKind::Tree && dataset.n_classes() != 2)
        throw config_error("tree-engine classification supports exactly 2 classes");
    if (holdout_fraction < 0.0 || holdout_fraction >= 1.0)
        throw config_error("holdout fraction outside [0,1)");
    Problem p;
    p.kind = ProblemKind::Classification;
    p.engine = engine;
    p.name = dataset.name;
    p.success_threshold = threshold;
    if (engine == EngineKind::Tree) {
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < dataset.n_features; ++i)
            vars.push_back("x" + std::to_string(i));
        p.pset = psets::arithmetic(vars);
    }
    p.data = std::move(dataset);
    p.holdout_fraction = holdout_fraction;
    if (holdout_fraction > 0.0) {
        // Deterministic per-class tail split: the last floor(h * count) rows
        // of each class are held out; both splits keep every class.
        std::vector<std::size_t> class_count(p.data.n_classes(), 0);
        for (int label : p.data.labels) ++class_count[static_cast<std::size_t>(label)];
        std::vector<std::size_t> to_hold(p.data.n_classes());
        for (std::size_t c = 0; c < class_count.size(); ++c) {
            if (class_count[c] < 2)
                throw config_error("class '" + p.data.class_names[c] +
                                   "' is too small for a holdout split");
            const auto h = static_cast<std::size_t>(
                std::floor(holdout_fraction * static_cast<double>(class_count[c])));
            to_hold[c] = std::clamp<std::size_t>(h, 1, class_count[c] - 1);
        }
        p.in_train.assign(p.data.n_samples(), 1);
        for (std::size_t i = p.data.n_samples(); i-- > 0;) {
            const auto c = static_cast<std::size_t>(p.data.labels[i]);
            if (to_hold[c] > 0) {
                p.in_train[i] = 0;
                --to_hold[c];
            }
        }
    }
    return p;
}

} // namespace evoparam

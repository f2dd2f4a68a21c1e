#include "evoparam/metrics.hpp"

#include <cmath>
#include <vector>

#include "evoparam/errors.hpp"

namespace evoparam {

double balanced_accuracy(std::span<const int> predictions, std::span<const int> truth,
                         std::size_t n_classes) {
    if (predictions.empty()) throw config_error("balanced_accuracy: empty input");
    if (predictions.size() != truth.size())
        throw config_error("balanced_accuracy: length mismatch");
    if (n_classes == 0) throw config_error("balanced_accuracy: no classes");

    std::vector<std::size_t> total(n_classes, 0), correct(n_classes, 0);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const int t = truth[i];
        if (t < 0 || static_cast<std::size_t>(t) >= n_classes)
            throw config_error("balanced_accuracy: truth label out of range");
        ++total[static_cast<std::size_t>(t)];
        if (predictions[i] == t) ++correct[static_cast<std::size_t>(t)];
    }
    double sum = 0.0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        if (total[c] == 0)
            throw config_error("balanced_accuracy: class " + std::to_string(c) +
                               " absent from truth");
        sum += static_cast<double>(correct[c]) / static_cast<double>(total[c]);
    }
    return sum / static_cast<double>(n_classes);
}

SuccessCriterion SuccessCriterion::uniform(const std::map<std::string, double>& fitness_keys,
                                           double threshold) {
    SuccessCriterion c;
    for (const auto& [name, unused] : fitness_keys) c.thresholds[name] = threshold;
    c.validate();
    return c;
}

void SuccessCriterion::validate() const {
    for (const auto& [name, t] : thresholds)
        if (t < 0.0 || t > 1.0)
            throw config_error("threshold for '" + name + "' outside [0,1]");
}

bool evaluate_success(const std::map<std::string, double>& results,
                      const SuccessCriterion& criterion) {
    criterion.validate();
    for (const auto& [name, threshold] : criterion.thresholds) {
        auto it = results.find(name);
        if (it == results.end())
            throw config_error("evaluate_success: missing result for '" + name + "'");
        if (it->second < threshold) return false;
    }
    return true;
}

double aggregate_fitness(const std::map<std::string, double>& per_problem,
                         const std::map<std::string, double>& weights) {
    if (per_problem.size() != weights.size())
        throw config_error("aggregate_fitness: key sets differ");
    double sum = 0.0, wsum = 0.0;
    for (const auto& [name, w] : weights) {
        auto it = per_problem.find(name);
        if (it == per_problem.end())
            throw config_error("aggregate_fitness: missing fitness for '" + name + "'");
        if (w < 0.0) throw config_error("aggregate_fitness: negative weight for '" + name + "'");
        sum += w * it->second;
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw config_error("aggregate_fitness: weights sum to " + std::to_string(wsum));
    return sum;
}

} // namespace evoparam

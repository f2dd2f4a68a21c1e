#pragma once

#include <map>
#include <span>
#include <string>

namespace evoparam {

// Mean over classes of per-class recall. Class ids must lie in
// [0, n_classes) and every class must occur in `truth`.
double balanced_accuracy(std::span<const int> predictions, std::span<const int> truth,
                         std::size_t n_classes);

// Per-problem fitness thresholds a parameter set must attain jointly.
struct SuccessCriterion {
    std::map<std::string, double> thresholds;

    static SuccessCriterion uniform(const std::map<std::string, double>& fitness_keys_ignored,
                                    double threshold);
    void validate() const; // thresholds in [0,1]
};

// True iff every criterion problem's best fitness >= its threshold
// (inclusive). Missing problems are an error.
bool evaluate_success(const std::map<std::string, double>& results,
                      const SuccessCriterion& criterion);

// Weighted mean; weights must be non-negative, sum to 1 within 1e-9, and
// cover exactly the fitness keys.
double aggregate_fitness(const std::map<std::string, double>& per_problem,
                         const std::map<std::string, double>& weights);

} // namespace evoparam

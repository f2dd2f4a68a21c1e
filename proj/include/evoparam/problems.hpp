#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evoparam/ant.hpp"
#include "evoparam/dataset.hpp"
#include "evoparam/stack_program.hpp"
#include "evoparam/tree.hpp"

namespace evoparam {

enum class ProblemKind { Regression, Parity, Multiplexer, Ant, Classification };
enum class EngineKind { Tree, Stack };

inline constexpr std::size_t kOutputDimCap = 4;

// A benchmark task exposing a normalized fitness in [0,1]. Immutable after
// construction; safe to share across concurrent runs.
struct Problem {
    ProblemKind kind = ProblemKind::Regression;
    EngineKind engine = EngineKind::Tree;
    std::string name;
    double success_threshold = 0.97;

    PrimitiveSet pset;                            // tree-engine problems
    std::vector<std::pair<double, double>> points; // regression
    Dataset data;                                  // parity / multiplexer / classification
    AntTrail trail;                                // ant

    // Classification only: fraction of each class held out of the fitness
    // computation (deterministic per-class tail split). 0 = score on the
    // full dataset, the default for tuning experiments.
    double holdout_fraction = 0.0;
    std::vector<std::uint8_t> in_train; // per-sample mask when holdout is on

    // Boolean truth tables packed 64 rows per word for bit-parallel scoring
    // (parity/multiplexer); bit_features is block-major: [block][feature].
    std::vector<std::uint64_t> bit_features;
    std::vector<std::uint64_t> bit_labels;
    std::vector<std::uint64_t> bit_valid;

    // Stack-engine output width: class count capped at kOutputDimCap.
    std::size_t output_dim() const;

    // Normalized fitness of a tree genotype (engine must be Tree).
    double tree_fitness(const ProgramTree& tree) const;
    // Normalized fitness of a stack genotype (engine must be Stack).
    double stack_fitness(const StackProgram& prog) const;
    // Balanced accuracy on the held-out rows, centroids fitted on the train
    // split; only valid when holdout_fraction > 0.
    double stack_holdout_fitness(const StackProgram& prog) const;
};

// n evenly spaced points of y = x^4 + x^3 + x^2 + x over [lo, hi].
std::vector<std::pair<double, double>> quartic_dataset(int n_points, double lo, double hi);

// All 2^n bit rows labeled "1" when the count of 1-bits is even. 2 <= n <= 10.
Dataset parity_dataset(int n_bits);

// All 2^(k + 2^k) rows for k address bits in {2,3}; label is the selected
// data line.
Dataset multiplexer_dataset(int addr_bits);

// Maps a raw outcome onto [0,1]: regression takes MAE to 1/(1+MAE),
// boolean/classification problems pass balanced accuracy through, ant takes
// food_eaten to food_eaten/food_total.
double normalized_fitness(const Problem& problem, double raw_outcome);

Problem make_quartic_problem(int n_points = 20, double lo = -1.0, double hi = 1.0,
                             double threshold = 0.97);
Problem make_parity_problem(int n_bits, double threshold = 0.97);
Problem make_multiplexer_problem(int addr_bits, double threshold = 0.97);
Problem make_ant_problem(AntTrail trail, double threshold = 0.97);
// Tree-engine classification is binary (sign of the program output); the
// stack engine handles any class count. A non-zero holdout fraction keeps
// that share of every class out of the fitness computation.
Problem make_classification_problem(Dataset dataset, EngineKind engine = EngineKind::Stack,
                                    double threshold = 0.97, double holdout_fraction = 0.0);

} // namespace evoparam

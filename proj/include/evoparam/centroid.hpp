#pragma once

#include <span>
#include <vector>

namespace evoparam {

// Per-class mean vectors in program-output space.
struct CentroidModel {
    std::vector<std::vector<double>> centroids; // [class][dim]
    std::size_t output_dim = 0;
};

// Arithmetic mean of output vectors per class; every class in [0, n_classes)
// must have at least one sample.
CentroidModel fit_centroids(const std::vector<std::vector<double>>& outputs,
                            std::span<const int> labels, std::size_t n_classes);

// Argmin of Euclidean distance over classes; ties broken by class order.
int classify(const CentroidModel& model, std::span<const double> output);

} // namespace evoparam

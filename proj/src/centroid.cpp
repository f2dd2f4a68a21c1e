#include "evoparam/centroid.hpp"

#include <string>

#include "evoparam/errors.hpp"

namespace evoparam {

CentroidModel fit_centroids(const std::vector<std::vector<double>>& outputs,
                            std::span<const int> labels, std::size_t n_classes) {
    if (outputs.empty()) throw config_error("fit_centroids: no outputs");
    if (outputs.size() != labels.size())
        throw config_error("fit_centroids: outputs and labels differ in length");
    const std::size_t dim = outputs[0].size();

    CentroidModel model;
    model.output_dim = dim;
    model.centroids.assign(n_classes, std::vector<double>(dim, 0.0));
    std::vector<std::size_t> counts(n_classes, 0);

    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (outputs[i].size() != dim)
            throw config_error("fit_centroids: output vectors differ in length");
        const int cls = labels[i];
        if (cls < 0 || static_cast<std::size_t>(cls) >= n_classes)
            throw config_error("fit_centroids: label out of range");
        auto& c = model.centroids[static_cast<std::size_t>(cls)];
        for (std::size_t d = 0; d < dim; ++d) c[d] += outputs[i][d];
        ++counts[static_cast<std::size_t>(cls)];
    }
    for (std::size_t cls = 0; cls < n_classes; ++cls) {
        if (counts[cls] == 0)
            throw eval_error("fit_centroids: class " + std::to_string(cls) + " has no samples");
        for (auto& v : model.centroids[cls]) v /= static_cast<double>(counts[cls]);
    }
    return model;
}

int classify(const CentroidModel& model, std::span<const double> output) {
    if (model.centroids.empty()) throw config_error("classify: model has no centroids");
    if (output.size() != model.output_dim)
        throw config_error("classify: output dimension mismatch");
    int best = 0;
    double best_d2 = 0.0;
    for (std::size_t cls = 0; cls < model.centroids.size(); ++cls) {
        double d2 = 0.0;
        for (std::size_t d = 0; d < model.output_dim; ++d) {
            const double diff = output[d] - model.centroids[cls][d];
            d2 += diff * diff;
        }
        if (cls == 0 || d2 < best_d2) {
            best = static_cast<int>(cls);
            best_d2 = d2;
        }
    }
    return best;
}

} // namespace evoparam

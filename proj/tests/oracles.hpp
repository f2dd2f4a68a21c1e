#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they check.

#include <map>
#include <span>
#include <vector>

namespace oracles {

// Per-class recall, averaged, computed with naive nested scans.
inline double balanced_accuracy(std::span<const int> pred, std::span<const int> truth,
                                int n_classes) {
    double sum = 0.0;
    for (int c = 0; c < n_classes; ++c) {
        int total = 0, correct = 0;
        for (std::size_t i = 0; i < truth.size(); ++i) {
            if (truth[i] != c) continue;
            ++total;
            if (pred[i] == c) ++correct;
        }
        sum += static_cast<double>(correct) / static_cast<double>(total);
    }
    return sum / n_classes;
}

inline double plain_accuracy(std::span<const int> pred, std::span<const int> truth) {
    int correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (pred[i] == truth[i]) ++correct;
    return static_cast<double>(correct) / static_cast<double>(truth.size());
}

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Exhaustive nearest-centroid search.
inline int nearest_centroid(const std::vector<std::vector<double>>& centroids,
                            std::span<const double> point) {
    int best = -1;
    double best_d2 = 0.0;
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        double d2 = 0.0;
        for (std::size_t d = 0; d < point.size(); ++d) {
            const double diff = point[d] - centroids[c][d];
            d2 += diff * diff;
        }
        if (best < 0 || d2 < best_d2) {
            best = static_cast<int>(c);
            best_d2 = d2;
        }
    }
    return best;
}

} // namespace oracles

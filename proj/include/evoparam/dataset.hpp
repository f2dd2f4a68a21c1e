#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace evoparam {

// A classification table: numeric features, string class labels mapped to
// ids by sorted label order (which also defines classifier tie-breaks).
struct Dataset {
    std::string name;
    std::vector<std::string> feature_names;
    std::vector<double> values; // row-major, n_samples x n_features
    std::vector<int> labels;    // index into class_names
    std::vector<std::string> class_names;

    std::size_t n_features = 0;

    std::size_t n_samples() const { return n_features == 0 ? 0 : values.size() / n_features; }
    std::size_t n_classes() const { return class_names.size(); }
    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * n_features, n_features};
    }
};

// Builds a Dataset from rows with verbatim string labels.
Dataset make_dataset(std::string name, std::vector<std::string> feature_names,
                     const std::vector<std::vector<double>>& rows,
                     const std::vector<std::string>& row_labels);

// CSV ingestion: header row required, UTF-8, comma-separated, no quoting.
// `label_column` is matched against header names first; failing that, a
// string of digits selects a zero-based column index. Ragged or
// non-numeric rows fail with an error naming the 1-based data row.
Dataset load_csv_dataset(const std::filesystem::path& path, const std::string& label_column);

} // namespace evoparam

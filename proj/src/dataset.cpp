#include "evoparam/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "evoparam/errors.hpp"

namespace evoparam {

Dataset make_dataset(std::string name, std::vector<std::string> feature_names,
                     const std::vector<std::vector<double>>& rows,
                     const std::vector<std::string>& row_labels) {
    if (rows.size() != row_labels.size())
        throw config_error("dataset rows and labels differ in length");
    if (rows.empty()) throw config_error("dataset has no rows");

    Dataset d;
    d.name = std::move(name);
    d.feature_names = std::move(feature_names);
    d.n_features = d.feature_names.size();

    std::vector<std::string> classes = row_labels;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    d.class_names = classes;

    std::map<std::string, int> class_id;
    for (std::size_t i = 0; i < classes.size(); ++i)
        class_id[classes[i]] = static_cast<int>(i);

    d.values.reserve(rows.size() * d.n_features);
    d.labels.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d.n_features)
            throw config_error("dataset row " + std::to_string(i + 1) + " has wrong width");
        d.values.insert(d.values.end(), rows[i].begin(), rows[i].end());
        d.labels.push_back(class_id.at(row_labels[i]));
    }
    return d;
}

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

Dataset load_csv_dataset(const std::filesystem::path& path, const std::string& label_column) {
    std::ifstream in(path);
    if (!in) throw ingest_error("cannot open '" + path.string() + "'");

    std::string line;
    if (!std::getline(in, line)) throw ingest_error("'" + path.string() + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_csv_line(line);
    if (header.empty()) throw ingest_error("'" + path.string() + "' has an empty header");

    int label_idx = -1;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == label_column) label_idx = static_cast<int>(i);
    if (label_idx < 0 && !label_column.empty() &&
        std::all_of(label_column.begin(), label_column.end(),
                    [](unsigned char c) { return std::isdigit(c); }))
        label_idx = std::stoi(label_column);
    if (label_idx < 0 || label_idx >= static_cast<int>(header.size()))
        throw ingest_error("label column '" + label_column + "' not found in '" + path.string() +
                           "'");

    std::vector<std::string> feature_names;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (static_cast<int>(i) != label_idx) feature_names.push_back(header[i]);

    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_labels;
    std::size_t row_no = 0; // 1-based data row
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++row_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ingest_error("'" + path.string() + "': ragged row " + std::to_string(row_no) +
                               " (" + std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(header.size()) + ")");
        std::vector<double> row;
        row.reserve(header.size() - 1);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (static_cast<int>(i) == label_idx) continue;
            double v = 0.0;
            const std::string& f = fields[i];
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || ptr != f.data() + f.size())
                throw ingest_error("'" + path.string() + "': row " + std::to_string(row_no) +
                                   " has non-numeric value '" + f + "' in column '" + header[i] +
                                   "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
        row_labels.push_back(fields[static_cast<std::size_t>(label_idx)]);
    }

    if (rows.size() < 2)
        throw ingest_error("'" + path.string() + "' has fewer than 2 data rows");

    Dataset d = make_dataset(path.stem().string(), std::move(feature_names), rows, row_labels);
    if (d.n_classes() < 2)
        throw ingest_error("'" + path.string() + "' has a single class ('" + d.class_names[0] +
                           "')");
    return d;
}

} // namespace evoparam

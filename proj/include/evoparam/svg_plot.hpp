#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace evoparam {
namespace svg {

// Fixed plot geometry; tests invert the pixel transform through these.
inline constexpr double kWidth = 640.0;
inline constexpr double kHeight = 480.0;
inline constexpr double kMarginLeft = 70.0;
inline constexpr double kMarginRight = 25.0;
inline constexpr double kMarginTop = 45.0;
inline constexpr double kMarginBottom = 60.0;

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    std::string label;
};

double x_to_px(const Axis& x, double value);
double y_to_px(const Axis& y, double value);

// Scatter marks; each circle carries data-x/data-y attributes with the
// original coordinates. An empty point list renders the annotation text.
void write_scatter(const std::filesystem::path& path, const std::string& title,
                   const std::vector<std::pair<double, double>>& points, const Axis& x,
                   const Axis& y, const std::string& empty_annotation = "no data");

// Equal-width bins across the full axis range (not the data extent); bars
// carry data-count attributes.
void write_histogram(const std::filesystem::path& path, const std::string& title,
                     const std::vector<double>& values, const Axis& x, int bins = 20,
                     const std::string& empty_annotation = "no data");

// Polyline with point marks, for sweep curves and fitness traces.
void write_line(const std::filesystem::path& path, const std::string& title,
                const std::vector<std::pair<double, double>>& points, const Axis& x, const Axis& y,
                const std::string& empty_annotation = "no data");

} // namespace svg
} // namespace evoparam

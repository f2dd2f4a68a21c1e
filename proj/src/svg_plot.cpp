#include "evoparam/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "evoparam/errors.hpp"

namespace evoparam {
namespace svg {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

double span_of(const Axis& a) {
    const double s = a.hi - a.lo;
    return s == 0.0 ? 1.0 : s;
}

struct SvgFile {
    std::ofstream out;

    explicit SvgFile(const std::filesystem::path& path) : out(path) {
        if (!out) throw ingest_error("cannot open '" + path.string() + "' for writing");
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
            << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
        out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    }

    void title(const std::string& text) {
        out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"16\">" << escape(text) << "</text>\n";
    }

    void frame_and_ticks(const Axis& x, const Axis& y, bool y_is_count = false) {
        const double x0 = kMarginLeft, x1 = kWidth - kMarginRight;
        const double y0 = kHeight - kMarginBottom, y1 = kMarginTop;
        out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << (x1 - x0)
            << "\" height=\"" << (y0 - y1) << "\" fill=\"none\" stroke=\"black\"/>\n";
        for (int t = 0; t <= 5; ++t) {
            const double fx = x.lo + span_of(x) * t / 5.0;
            const double px = x_to_px(x, fx);
            out << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\""
                << (y0 + 5) << "\" stroke=\"black\"/>\n";
            out << "<text x=\"" << px << "\" y=\"" << (y0 + 20)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
                << fmt(fx) << "</text>\n";
            const double fy = y.lo + span_of(y) * t / 5.0;
            const double py = y_to_px(y, fy);
            out << "<line x1=\"" << (x0 - 5) << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\""
                << py << "\" stroke=\"black\"/>\n";
            out << "<text x=\"" << (x0 - 8) << "\" y=\"" << (py + 4)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
                << (y_is_count ? fmt(std::round(fy)) : fmt(fy)) << "</text>\n";
        }
        out << "<text x=\"" << (x0 + (x1 - x0) / 2) << "\" y=\"" << (kHeight - 14)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
            << escape(x.label) << "</text>\n";
        out << "<text x=\"20\" y=\"" << (y1 + (y0 - y1) / 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
            << "transform=\"rotate(-90 20 " << (y1 + (y0 - y1) / 2) << ")\">" << escape(y.label)
            << "</text>\n";
    }

    void annotation(const std::string& text) {
        out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\" "
            << "fill=\"gray\">" << escape(text) << "</text>\n";
    }

    ~SvgFile() { out << "</svg>\n"; }
};

} // namespace

double x_to_px(const Axis& x, double value) {
    return kMarginLeft + (value - x.lo) / span_of(x) * (kWidth - kMarginLeft - kMarginRight);
}

double y_to_px(const Axis& y, double value) {
    return kHeight - kMarginBottom -
           (value - y.lo) / span_of(y) * (kHeight - kMarginTop - kMarginBottom);
}

void write_scatter(const std::filesystem::path& path, const std::string& title,
                   const std::vector<std::pair<double, double>>& points, const Axis& x,
                   const Axis& y, const std::string& empty_annotation) {
    SvgFile f(path);
    f.title(title);
    f.frame_and_ticks(x, y);
    if (points.empty()) {
        f.annotation(empty_annotation);
        return;
    }
    for (const auto& [px, py] : points) {
        f.out << "<circle cx=\"" << fmt(x_to_px(x, px)) << "\" cy=\"" << fmt(y_to_px(y, py))
              << "\" r=\"4\" fill=\"steelblue\" fill-opacity=\"0.7\" data-x=\"" << fmt(px)
              << "\" data-y=\"" << fmt(py) << "\"/>\n";
    }
}

void write_histogram(const std::filesystem::path& path, const std::string& title,
                     const std::vector<double>& values, const Axis& x, int bins,
                     const std::string& empty_annotation) {
    if (bins < 1) throw config_error("histogram needs >= 1 bin");
    SvgFile f(path);
    f.title(title);

    std::vector<int> counts(static_cast<std::size_t>(bins), 0);
    for (double v : values) {
        int b = static_cast<int>(std::floor((v - x.lo) / span_of(x) * bins));
        b = std::clamp(b, 0, bins - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    const int max_count = values.empty() ? 1 : std::max(1, *std::max_element(counts.begin(),
                                                                             counts.end()));
    Axis y{0.0, static_cast<double>(max_count), "count"};
    f.frame_and_ticks(x, y, true);
    if (values.empty()) {
        f.annotation(empty_annotation);
        return;
    }
    for (int b = 0; b < bins; ++b) {
        const int c = counts[static_cast<std::size_t>(b)];
        if (c == 0) continue;
        const double lo = x.lo + span_of(x) * b / bins;
        const double hi = x.lo + span_of(x) * (b + 1) / bins;
        const double px0 = x_to_px(x, lo), px1 = x_to_px(x, hi);
        const double py = y_to_px(y, c), py0 = y_to_px(y, 0.0);
        f.out << "<rect x=\"" << fmt(px0) << "\" y=\"" << fmt(py) << "\" width=\""
              << fmt(px1 - px0) << "\" height=\"" << fmt(py0 - py)
              << "\" fill=\"steelblue\" stroke=\"white\" data-count=\"" << c << "\" data-lo=\""
              << fmt(lo) << "\" data-hi=\"" << fmt(hi) << "\"/>\n";
    }
}

void write_line(const std::filesystem::path& path, const std::string& title,
                const std::vector<std::pair<double, double>>& points, const Axis& x, const Axis& y,
                const std::string& empty_annotation) {
    SvgFile f(path);
    f.title(title);
    f.frame_and_ticks(x, y);
    if (points.empty()) {
        f.annotation(empty_annotation);
        return;
    }
    f.out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& [px, py] : points)
        f.out << fmt(x_to_px(x, px)) << ',' << fmt(y_to_px(y, py)) << ' ';
    f.out << "\"/>\n";
    for (const auto& [px, py] : points) {
        f.out << "<circle cx=\"" << fmt(x_to_px(x, px)) << "\" cy=\"" << fmt(y_to_px(y, py))
              << "\" r=\"2.5\" fill=\"steelblue\" data-x=\"" << fmt(px) << "\" data-y=\""
              << fmt(py) << "\"/>\n";
    }
}

} // namespace svg
} // namespace evoparam

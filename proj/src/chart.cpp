#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "evoc/harness.hpp"

namespace evoc {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 70;
constexpr double kRight = 130;
constexpr double kTop = 40;
constexpr double kBottom = 50;

constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                             "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& y_label,
                           std::span<const ChartSeries> series) {
    std::size_t length = 0;
    double lo = 0.0;
    double hi = 1.0;
    bool first = true;
    for (const ChartSeries& s : series) {
        length = std::max(length, s.values.size());
        for (double v : s.values) {
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
    }
    lo = std::min(lo, 0.0);
    if (hi <= lo) hi = lo + 1.0;
    const double x_span = length > 1 ? static_cast<double>(length - 1) : 1.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](std::size_t i) { return kLeft + plot_w * static_cast<double>(i) / x_span; };
    const auto py = [&](double v) { return kTop + plot_h * (1.0 - (v - lo) / (hi - lo)); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << escape(title) << "</text>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kTop + plot_h << "\" stroke=\"black\"/>\n";

    for (int tick = 0; tick <= 4; ++tick) {
        const double v = lo + (hi - lo) * tick / 4.0;
        svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(py(v) + 4)
            << "\" text-anchor=\"end\">" << num(v) << "</text>\n";
        const auto i = static_cast<std::size_t>(std::lround(x_span * tick / 4.0));
        svg << "<text x=\"" << num(px(i)) << "\" y=\"" << kTop + plot_h + 16
            << "\" text-anchor=\"middle\">" << i << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\">iteration</text>\n";
    svg << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << kTop + plot_h / 2 << ")\">" << escape(y_label) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* color = kColors[k % kColors.size()];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[k].values.size(); ++i) {
            if (i > 0) svg << ' ';
            svg << num(px(i)) << ',' << num(py(series[k].values[i]));
        }
        svg << "\"/>\n";
        const double ly = kTop + 10 + 18 * static_cast<double>(k);
        svg << "<line x1=\"" << kWidth - kRight + 12 << "\" y1=\"" << ly << "\" x2=\""
            << kWidth - kRight + 32 << "\" y2=\"" << ly << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << kWidth - kRight + 38 << "\" y=\"" << ly + 4 << "\">"
            << escape(series[k].name) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace evoc

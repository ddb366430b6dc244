#include "districtpv/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

namespace districtpv {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 460.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

__attribute__((format(printf, 2, 3))) void append(std::string& out, const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out += buf;
}

std::string header(const std::string& title) {
    std::string s;
    append(s,
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
           "viewBox=\"0 0 %.0f %.0f\">\n",
           kWidth, kHeight, kWidth, kHeight);
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    append(s, "<text x=\"%.0f\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
              "text-anchor=\"middle\">%s</text>\n",
           kWidth / 2.0, title.c_str());
    return s;
}

// A pleasant tick step: 1/2/5 times a power of ten covering the range.
double tick_step(double max_value) {
    if (max_value <= 0.0) return 1.0;
    const double raw = max_value / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag) return m * mag;
    return 10.0 * mag;
}

void draw_y_axis(std::string& s, double y_max, double y_min, const std::string& y_label) {
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const double step = tick_step(std::max(std::abs(y_max), std::abs(y_min)));
    const double lo = std::floor(y_min / step) * step;
    const double hi = std::ceil(y_max / step) * step;
    for (double v = lo; v <= hi + step * 0.5; v += step) {
        const double frac = (v - y_min) / (y_max - y_min);
        if (frac < -0.001 || frac > 1.001) continue;
        const double y = kMarginTop + plot_h * (1.0 - frac);
        append(s, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#ddd\"/>\n",
               kMarginLeft, y, kWidth - kMarginRight, y);
        append(s, "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"11\" "
                  "text-anchor=\"end\">%s</text>\n",
               kMarginLeft - 6.0, y + 4.0, num(v).c_str());
    }
    append(s, "<text x=\"16\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"12\" "
              "transform=\"rotate(-90 16 %.1f)\" text-anchor=\"middle\">%s</text>\n",
           kMarginTop + plot_h / 2.0, kMarginTop + plot_h / 2.0, y_label.c_str());
}

} // namespace

std::string svg_grouped_bars(const std::string& title, const std::vector<std::string>& categories,
                             const std::vector<BarGroup>& groups, const std::string& y_label) {
    std::string s = header(title);
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;

    double y_max = 0.0;
    for (const auto& g : groups)
        for (double v : g.values) y_max = std::max(y_max, v);
    if (y_max <= 0.0) y_max = 1.0;
    y_max *= 1.05;

    draw_y_axis(s, y_max, 0.0, y_label);

    const std::size_t n_cat = categories.size();
    const std::size_t n_grp = std::max<std::size_t>(groups.size(), 1);
    const double cat_w = plot_w / static_cast<double>(std::max<std::size_t>(n_cat, 1));
    const double bar_w = cat_w * 0.8 / static_cast<double>(n_grp);

    for (std::size_t c = 0; c < n_cat; ++c) {
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (c >= groups[g].values.size()) continue;
            const double v = groups[g].values[c];
            const double h = plot_h * v / y_max;
            const double x = kMarginLeft + cat_w * static_cast<double>(c) + cat_w * 0.1 +
                             bar_w * static_cast<double>(g);
            append(s, "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                      "fill=\"%s\"/>\n",
                   x, kMarginTop + plot_h - h, bar_w, h, groups[g].color.c_str());
        }
        append(s, "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"11\" "
                  "text-anchor=\"middle\">%s</text>\n",
               kMarginLeft + cat_w * (static_cast<double>(c) + 0.5), kHeight - kMarginBottom + 16.0,
               categories[c].c_str());
    }

    double lx = kMarginLeft;
    for (const auto& g : groups) {
        append(s, "<rect x=\"%.1f\" y=\"%.1f\" width=\"12\" height=\"12\" fill=\"%s\"/>\n", lx,
               kHeight - 24.0, g.color.c_str());
        append(s, "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                  "font-size=\"12\">%s</text>\n",
               lx + 16.0, kHeight - 14.0, g.label.c_str());
        lx += 16.0 + 9.0 * static_cast<double>(g.label.size()) + 24.0;
    }

    s += "</svg>\n";
    return s;
}

std::string svg_lines(const std::string& title, const std::vector<LineSeries>& series,
                      const std::string& x_label, const std::string& y_label) {
    std::string s = header(title);
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool first = true;
    for (const auto& ls : series)
        for (std::size_t i = 0; i < ls.x.size(); ++i) {
            if (first) {
                x_min = x_max = ls.x[i];
                y_min = y_max = ls.y[i];
                first = false;
            }
            x_min = std::min(x_min, ls.x[i]);
            x_max = std::max(x_max, ls.x[i]);
            y_min = std::min(y_min, ls.y[i]);
            y_max = std::max(y_max, ls.y[i]);
        }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;
    const double pad = (y_max - y_min) * 0.05;
    y_max += pad;
    y_min -= pad;

    draw_y_axis(s, y_max, y_min, y_label);

    // Zero line when the range crosses zero.
    if (y_min < 0.0 && y_max > 0.0) {
        const double y0 = kMarginTop + plot_h * (1.0 - (0.0 - y_min) / (y_max - y_min));
        append(s, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#888\" "
                  "stroke-dasharray=\"4 3\"/>\n",
               kMarginLeft, y0, kWidth - kMarginRight, y0);
    }

    for (const auto& ls : series) {
        std::string points;
        for (std::size_t i = 0; i < ls.x.size(); ++i) {
            const double px = kMarginLeft + plot_w * (ls.x[i] - x_min) / (x_max - x_min);
            const double py = kMarginTop + plot_h * (1.0 - (ls.y[i] - y_min) / (y_max - y_min));
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.1f,%.1f ", px, py);
            points += buf;
        }
        append(s, "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"2\" points=\"%s\"/>\n",
               ls.color.c_str(), points.c_str());
    }

    append(s, "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"12\" "
              "text-anchor=\"middle\">%s</text>\n",
           kMarginLeft + plot_w / 2.0, kHeight - kMarginBottom + 34.0, x_label.c_str());

    double lx = kMarginLeft;
    for (const auto& ls : series) {
        append(s, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" "
                  "stroke-width=\"3\"/>\n",
               lx, kHeight - 18.0, lx + 14.0, kHeight - 18.0, ls.color.c_str());
        append(s, "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                  "font-size=\"12\">%s</text>\n",
               lx + 18.0, kHeight - 14.0, ls.label.c_str());
        lx += 18.0 + 9.0 * static_cast<double>(ls.label.size()) + 24.0;
    }

    s += "</svg>\n";
    return s;
}

} // namespace districtpv

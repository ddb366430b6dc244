#pragma once

#include <string>
#include <vector>

namespace districtpv {

// Minimal native SVG rendering: grouped monthly bars and multi-series line
// charts, deterministic output (fixed float formatting, no timestamps).

struct BarGroup {
    std::string label;                // legend entry
    std::string color;                // CSS color
    std::vector<double> values;       // one bar per category
};

struct LineSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

std::string svg_grouped_bars(const std::string& title, const std::vector<std::string>& categories,
                             const std::vector<BarGroup>& groups, const std::string& y_label);

std::string svg_lines(const std::string& title, const std::vector<LineSeries>& series,
                      const std::string& x_label, const std::string& y_label);

} // namespace districtpv

#pragma once

#include <span>
#include <string>
#include <vector>

namespace idtnet::plot {

struct Series {
    enum class Style { line, band_line, points };

    Style style = Style::line;
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> lower; // band_line only
    std::vector<double> upper;
};

struct Panel {
    std::string title;
    std::string x_label = "k";
    std::string y_label = "D (steps)";
    std::vector<Series> series;
};

/// Self-contained SVG with the panels laid out row-major in `columns` columns.
std::string render_svg(std::span<const Panel> panels, int columns);

} // namespace idtnet::plot

#include "idtnet/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>


namespace idtnet::plot {

namespace {

constexpr double kPanelW = 420.0;
constexpr double kPanelH = 320.0;
constexpr double kLeft = 62.0;
constexpr double kRight = 16.0;
constexpr double kTop = 34.0;
constexpr double kBottom = 48.0;

const char* const kPalette[] = {"#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#555555"};

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v)
{
    // two decimals is plenty for pixel coordinates and keeps files stable
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << v;
    return os.str();
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

double nice_step(double span)
{
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    const double nice = f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0;
    return nice * mag;
}

Range padded(double lo, double hi, bool include_zero)
{
    if (include_zero) {
        lo = std::min(lo, 0.0);
    }
    if (!(hi > lo)) {
        hi = lo + 1.0;
    }
    const double step = nice_step(hi - lo);
    return {std::floor(lo / step) * step, std::ceil(hi / step) * step};
}

void render_panel(std::ostringstream& svg, const Panel& panel, double ox, double oy, char tag)
{
    double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
    for (const auto& s : panel.series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xlo = std::min(xlo, s.x[i]);
            xhi = std::max(xhi, s.x[i]);
            ylo = std::min(ylo, s.style == Series::Style::band_line ? s.lower[i] : s.y[i]);
            yhi = std::max(yhi, s.style == Series::Style::band_line ? s.upper[i] : s.y[i]);
        }
    }
    if (!std::isfinite(xlo)) {
        xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
    }
    const Range xr = padded(xlo, xhi, false);
    const Range yr = padded(ylo, yhi, true);
    const double pw = kPanelW - kLeft - kRight;
    const double ph = kPanelH - kTop - kBottom;
    auto px = [&](double x) { return ox + kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return oy + kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    svg << "<g class=\"panel\">\n";
    svg << "<text x=\"" << num(ox + kLeft) << "\" y=\"" << num(oy + 20) << "\" font-size=\"13\">(" << tag << ") "
        << escape(panel.title) << "</text>\n";
    svg << "<rect x=\"" << num(ox + kLeft) << "\" y=\"" << num(oy + kTop) << "\" width=\"" << num(pw)
        << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"#333\"/>\n";

    for (int axis = 0; axis < 2; ++axis) {
        const Range r = axis == 0 ? xr : yr;
        const double step = nice_step(r.hi - r.lo);
        for (double v = r.lo; v <= r.hi + step * 1e-9; v += step) {
            const double tick = std::abs(v) < step * 1e-9 ? 0.0 : v;
            std::ostringstream label;
            label << tick;
            if (axis == 0) {
                svg << "<text x=\"" << num(px(tick)) << "\" y=\"" << num(oy + kTop + ph + 16)
                    << "\" font-size=\"10\" text-anchor=\"middle\">" << label.str() << "</text>\n";
            } else {
                svg << "<text x=\"" << num(ox + kLeft - 5) << "\" y=\"" << num(py(tick) + 3)
                    << "\" font-size=\"10\" text-anchor=\"end\">" << label.str() << "</text>\n";
            }
        }
    }
    svg << "<text class=\"xlabel\" x=\"" << num(ox + kLeft + pw / 2) << "\" y=\"" << num(oy + kPanelH - 10)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(panel.x_label) << "</text>\n";
    svg << "<text class=\"ylabel\" x=\"" << num(ox + 14) << "\" y=\"" << num(oy + kTop + ph / 2)
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 " << num(ox + 14) << ' '
        << num(oy + kTop + ph / 2) << ")\">" << escape(panel.y_label) << "</text>\n";

    std::size_t color = 0;
    for (const auto& s : panel.series) {
        const char* c = kPalette[color++ % std::size(kPalette)];
        if (s.style == Series::Style::band_line && !s.x.empty()) {
            svg << "<polygon class=\"band\" fill=\"" << c << "\" fill-opacity=\"0.22\" stroke=\"none\" points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                svg << num(px(s.x[i])) << ',' << num(py(s.upper[i])) << ' ';
            }
            for (std::size_t i = s.x.size(); i-- > 0;) {
                svg << num(px(s.x[i])) << ',' << num(py(s.lower[i])) << ' ';
            }
            svg << "\"/>\n";
        }
        if (s.style == Series::Style::points) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                svg << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"2\" fill=\"" << c
                    << "\"/>\n";
            }
        } else {
            svg << "<polyline class=\"curve\" fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.6\" points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                svg << num(px(s.x[i])) << ',' << num(py(s.y[i])) << ' ';
            }
            svg << "\"/>\n";
        }
    }

    if (panel.series.size() > 1) {
        svg << "<g class=\"legend\">\n";
        double ly = oy + kTop + 14;
        color = 0;
        for (const auto& s : panel.series) {
            const char* c = kPalette[color++ % std::size(kPalette)];
            const double lx = ox + kLeft + pw - 150;
            svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 18) << "\" y2=\""
                << num(ly - 4) << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
            svg << "<text x=\"" << num(lx + 24) << "\" y=\"" << num(ly) << "\" font-size=\"11\">" << escape(s.label)
                << "</text>\n";
            ly += 15;
        }
        svg << "</g>\n";
    }
    svg << "</g>\n";
}

} // namespace

std::string render_svg(std::span<const Panel> panels, int columns)
{
    if (panels.empty()) {
        throw std::invalid_argument("nothing to plot");
    }
    for (const auto& p : panels) {
        for (const auto& s : p.series) {
            if (s.y.size() != s.x.size() ||
                (s.style == Series::Style::band_line && (s.lower.size() != s.x.size() || s.upper.size() != s.x.size()))) {
                throw std::invalid_argument("series '" + s.label + "' has mismatched lengths");
            }
        }
    }
    columns = std::max(1, std::min<int>(columns, static_cast<int>(panels.size())));
    const int rows = (static_cast<int>(panels.size()) + columns - 1) / columns;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(columns * kPanelW) << "\" height=\""
        << num(rows * kPanelH) << "\" font-family=\"sans-serif\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const double ox = static_cast<double>(i % static_cast<std::size_t>(columns)) * kPanelW;
        const double oy = static_cast<double>(i / static_cast<std::size_t>(columns)) * kPanelH;
        render_panel(svg, panels[i], ox, oy, static_cast<char>('a' + i % 26));
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace idtnet::plot

#include "idtnet/trend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace idtnet::trend {

XYSeries::XYSeries(std::vector<Point> points) : points_(std::move(points))
{
    for (const auto& p : points_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("series values must be finite");
        }
    }
    std::stable_sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].x == points_[i - 1].x) {
            throw std::invalid_argument("duplicate x value " + std::to_string(points_[i].x));
        }
    }
}

XYSeries gaussian_smooth(const XYSeries& s, double sigma_points)
{
    if (s.empty()) {
        throw std::invalid_argument("cannot smooth an empty series");
    }
    if (s.size() < 2) {
        throw std::invalid_argument("smoothing needs at least 2 points");
    }
    if (!(sigma_points > 0.0)) {
        throw std::invalid_argument("smoothing width must be > 0");
    }
    const auto& pts = s.points();
    const auto n = static_cast<std::ptrdiff_t>(pts.size());
    const auto reach = static_cast<std::ptrdiff_t>(std::floor(4.0 * sigma_points));
    std::vector<double> w(static_cast<std::size_t>(reach) + 1);
    for (std::ptrdiff_t d = 0; d <= reach; ++d) {
        const double z = static_cast<double>(d) / sigma_points;
        w[static_cast<std::size_t>(d)] = std::exp(-0.5 * z * z);
    }
    std::vector<Point> out(pts.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        double num = 0.0;
        double den = 0.0;
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - reach);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, i + reach);
        for (std::ptrdiff_t j = lo; j <= hi; ++j) {
            const double wj = w[static_cast<std::size_t>(std::abs(j - i))];
            num += wj * pts[static_cast<std::size_t>(j)].y;
            den += wj;
        }
        out[static_cast<std::size_t>(i)] = {pts[static_cast<std::size_t>(i)].x, num / den};
    }
    return XYSeries(std::move(out));
}

LinearFit linear_fit(const XYSeries& s, double x_from, double x_to)
{
    std::vector<Point> in;
    for (const auto& p : s.points()) {
        if (p.x >= x_from && p.x <= x_to) {
            in.push_back(p);
        }
    }
    if (in.size() < 3) {
        throw std::invalid_argument("linear fit needs at least 3 points in range");
    }
    const double n = static_cast<double>(in.size());
    double mx = 0.0;
    double my = 0.0;
    for (const auto& p : in) {
        mx += p.x;
        my += p.y;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : in) {
        sxx += (p.x - mx) * (p.x - mx);
        sxy += (p.x - mx) * (p.y - my);
    }
    if (!(sxx > 0.0)) {
        throw std::invalid_argument("linear fit needs at least two distinct x values");
    }
    LinearFit fit;
    fit.points = in.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (const auto& p : in) {
        const double r = p.y - (fit.intercept + fit.slope * p.x);
        rss += r * r;
    }
    const double sigma2 = rss / (n - 2.0);
    fit.slope_se = std::sqrt(sigma2 / sxx);
    fit.intercept_se = std::sqrt(sigma2 * (1.0 / n + mx * mx / sxx));
    return fit;
}

} // namespace idtnet::trend

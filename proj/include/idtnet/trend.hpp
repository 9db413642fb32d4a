#pragma once

#include <cstddef>
#include <vector>

namespace idtnet::trend {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Points with strictly increasing, finite x and finite y.
class XYSeries {
public:
    XYSeries() = default;
    /// Sorts by x; throws std::invalid_argument on duplicate or non-finite values.
    explicit XYSeries(std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

private:
    std::vector<Point> points_;
};

/// Gaussian kernel over data-point index (not x distance), truncated at 4
/// sigma. Near the ends the missing weights are dropped and the rest
/// renormalized. x is unchanged.
XYSeries gaussian_smooth(const XYSeries& s, double sigma_points = 10.0);

struct LinearFit {
    double slope = 0.0;
    double slope_se = 0.0;
    double intercept = 0.0;
    double intercept_se = 0.0;
    std::size_t points = 0;
};

/// Ordinary least squares over points with x_from <= x <= x_to; standard
/// errors from the residual variance with n - 2 degrees of freedom.
LinearFit linear_fit(const XYSeries& s, double x_from, double x_to);

} // namespace idtnet::trend

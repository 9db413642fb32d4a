#include "idtnet/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace idtnet {

namespace {

constexpr double kMassTolerance = 1e-12;

void check_mass(std::span<const double> probs)
{
    if (probs.empty()) {
        throw std::invalid_argument("distribution over an empty alphabet");
    }
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("probability must be finite and non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
        throw std::invalid_argument("probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

} // namespace

Dist::Dist(std::vector<double> probs) : probs_(std::move(probs))
{
    check_mass(probs_);
}

Joint2::Joint2(std::size_t rows, std::size_t cols, std::vector<double> probs)
    : rows_(rows), cols_(cols), probs_(std::move(probs))
{
    if (probs_.size() != rows_ * cols_) {
        throw std::invalid_argument("joint table has the wrong number of cells");
    }
    check_mass(probs_);
}

Dist Joint2::marginal_x() const
{
    std::vector<double> m(rows_, 0.0);
    for (std::size_t x = 0; x < rows_; ++x) {
        for (std::size_t y = 0; y < cols_; ++y) {
            m[x] += (*this)(x, y);
        }
    }
    return Dist(std::move(m));
}

Dist Joint2::marginal_y() const
{
    std::vector<double> m(cols_, 0.0);
    for (std::size_t x = 0; x < rows_; ++x) {
        for (std::size_t y = 0; y < cols_; ++y) {
            m[y] += (*this)(x, y);
        }
    }
    return Dist(std::move(m));
}

double entropy_bits(std::span<const double> probs)
{
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return std::max(h, 0.0);
}

double entropy(const Dist& d)
{
    return entropy_bits(d.probs());
}

double mutual_information(const Joint2& j)
{
    // sum p(x,y) log p(x,y) / (p(x) p(y)) rather than H + H - H; it has no
    // cancellation between large entropies when the dependence is weak.
    const Dist px = j.marginal_x();
    const Dist py = j.marginal_y();
    double mi = 0.0;
    for (std::size_t x = 0; x < j.rows(); ++x) {
        for (std::size_t y = 0; y < j.cols(); ++y) {
            const double p = j(x, y);
            if (p > 0.0) {
                mi += p * std::log2(p / (px[x] * py[y]));
            }
        }
    }
    return std::max(mi, 0.0);
}

double kl_divergence(const Dist& p, const Dist& q)
{
    if (p.size() != q.size()) {
        throw std::invalid_argument("kl_divergence over different alphabets");
    }
    double kl = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            continue;
        }
        if (q[i] == 0.0) {
            throw SupportError("kl_divergence: q is zero at symbol " + std::to_string(i) +
                               " where p has mass");
        }
        kl += p[i] * std::log2(p[i] / q[i]);
    }
    return std::max(kl, 0.0);
}

Dist empirical_distribution(std::span<const std::uint64_t> counts)
{
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total == 0) {
        throw std::invalid_argument("empirical distribution of zero observations");
    }
    std::vector<double> p(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return Dist(std::move(p));
}

} // namespace idtnet

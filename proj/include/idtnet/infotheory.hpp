#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace idtnet {

/// Probability mass over a finite alphabet. Logarithms are base 2 throughout.
class Dist {
public:
    /// Validates p >= 0 and sum 1 within 1e-12.
    explicit Dist(std::vector<double> probs);

    std::span<const double> probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }

private:
    std::vector<double> probs_;
};

/// Joint mass p(x, y), row-major with x indexing rows.
class Joint2 {
public:
    Joint2(std::size_t rows, std::size_t cols, std::vector<double> probs);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t x, std::size_t y) const { return probs_[x * cols_ + y]; }
    std::span<const double> probs() const { return probs_; }

    Dist marginal_x() const;
    Dist marginal_y() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> probs_;
};

/// Thrown when q has a zero where p has mass.
class SupportError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raw-span forms skip validation; used by hot loops that build their own
/// masses.
double entropy_bits(std::span<const double> probs);

double entropy(const Dist& d);
double mutual_information(const Joint2& j);
double kl_divergence(const Dist& p, const Dist& q);

/// Maximum-likelihood frequencies, no smoothing.
Dist empirical_distribution(std::span<const std::uint64_t> counts);

} // namespace idtnet

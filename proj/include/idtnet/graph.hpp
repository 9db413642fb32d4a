#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "idtnet/rng.hpp"

namespace idtnet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph in compressed adjacency form.
///
/// Construction validates the structural invariants (no self-loops, no
/// duplicate edges, ids in range) and throws std::invalid_argument otherwise,
/// so every live Graph is simple and symmetric.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return neighbors_.size() / 2; }

    std::span<const NodeId> neighbors(std::size_t i) const
    {
        return {neighbors_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
    std::vector<std::size_t> degrees() const;
    std::size_t max_degree() const;

    bool has_edge(NodeId u, NodeId v) const;

    /// Every edge once, as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    /// Star with `leaves` leaves; node 0 is the center.
    static Graph star(std::size_t leaves);
    static Graph path(std::size_t n);

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> neighbors_; // sorted within each row
};

/// Thrown when a degree sequence cannot be realized as a simple graph.
class GraphBuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DegreeMass {
    int k = 0;
    double p = 0.0;
};

/// Probability mass over degrees with its mean.
class DegreeDistribution {
public:
    enum class Kind { degree, excess };

    /// Weights need not be normalized; they are rescaled to sum to one.
    /// A `degree` distribution requires k >= 1; an `excess` one allows k = 0.
    explicit DegreeDistribution(std::vector<DegreeMass> weights, Kind kind = Kind::degree);

    /// p(k) proportional to k^-gamma on [k_min, k_max].
    static DegreeDistribution power_law(double gamma, int k_min, int k_max);
    static DegreeDistribution delta(int k);

    std::span<const DegreeMass> support() const { return support_; }
    double mean() const { return mean_; }
    int min_k() const { return support_.front().k; }
    int max_k() const { return support_.back().k; }
    double prob(int k) const;
    Kind kind() const { return kind_; }

private:
    std::vector<DegreeMass> support_; // ascending k, zero masses dropped
    double mean_ = 0.0;
    Kind kind_ = Kind::degree;
};

/// Default degree cutoff ceil(sqrt(n)).
int default_k_max(std::size_t n);

/// i.i.d. degrees; an odd total is repaired by redrawing one uniformly chosen
/// entry at a time, at most 1000 times.
std::vector<int> sample_degree_sequence(const DegreeDistribution& dist, std::size_t n, Rng& rng);

/// Configuration model: random stub matching, then self-loops and multi-edges
/// are removed with degree-preserving double-edge swaps (at most 100 |E|).
Graph build_configuration_graph(std::span<const int> degrees, Rng& rng);

/// q(m) = (m + 1) p(m + 1) / <k>.
DegreeDistribution excess_degree_distribution(const DegreeDistribution& dist);

/// 3 x triangles / connected triples; 0 when there are no triples.
double global_clustering(const Graph& g);

} // namespace idtnet

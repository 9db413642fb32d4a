#include "idtnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

namespace idtnet {

Graph::Graph(std::size_t n, std::span<const Edge> edges)
{
    if (n > std::size_t{UINT32_MAX}) {
        throw std::invalid_argument("graph too large");
    }
    std::vector<std::size_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "," +
                                        std::to_string(v));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at node " + std::to_string(u));
        }
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        offsets_[i + 1] = offsets_[i] + deg[i];
    }
    neighbors_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        neighbors_[cursor[u]++] = v;
        neighbors_[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
        auto last = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            throw std::invalid_argument("duplicate edge at node " + std::to_string(i));
        }
    }
}

std::vector<std::size_t> Graph::degrees() const
{
    std::vector<std::size_t> out(node_count());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = degree(i);
    }
    return out;
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (std::size_t i = 0; i < node_count(); ++i) {
        best = std::max(best, degree(i));
    }
    return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const
{
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < node_count(); ++i) {
        for (NodeId j : neighbors(i)) {
            if (i < j) {
                out.emplace_back(static_cast<NodeId>(i), j);
            }
        }
    }
    return out;
}

Graph Graph::star(std::size_t leaves)
{
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) {
        e.emplace_back(0, static_cast<NodeId>(i));
    }
    return Graph(leaves + 1, e);
}

Graph Graph::path(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 1; i < n; ++i) {
        e.emplace_back(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
    }
    return Graph(n, e);
}

DegreeDistribution::DegreeDistribution(std::vector<DegreeMass> weights, Kind kind) : kind_(kind)
{
    const int lowest = kind == Kind::degree ? 1 : 0;
    std::sort(weights.begin(), weights.end(),
              [](const DegreeMass& a, const DegreeMass& b) { return a.k < b.k; });
    double total = 0.0;
    for (const auto& w : weights) {
        if (w.k < lowest) {
            throw std::invalid_argument("degree " + std::to_string(w.k) + " below support minimum " +
                                        std::to_string(lowest));
        }
        if (!(w.p >= 0.0) || !std::isfinite(w.p)) {
            throw std::invalid_argument("degree mass must be finite and non-negative");
        }
        total += w.p;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("empty degree distribution");
    }
    for (const auto& w : weights) {
        if (w.p == 0.0) {
            continue;
        }
        if (!support_.empty() && support_.back().k == w.k) {
            support_.back().p += w.p / total;
        } else {
            support_.push_back({w.k, w.p / total});
        }
    }
    mean_ = 0.0;
    for (const auto& m : support_) {
        mean_ += m.k * m.p;
    }
}

DegreeDistribution DegreeDistribution::power_law(double gamma, int k_min, int k_max)
{
    if (k_min < 1 || k_max < k_min) {
        throw std::invalid_argument("power law needs 1 <= k_min <= k_max");
    }
    std::vector<DegreeMass> w;
    for (int k = k_min; k <= k_max; ++k) {
        w.push_back({k, std::pow(static_cast<double>(k), -gamma)});
    }
    return DegreeDistribution(std::move(w));
}

DegreeDistribution DegreeDistribution::delta(int k)
{
    return DegreeDistribution({{k, 1.0}});
}

double DegreeDistribution::prob(int k) const
{
    auto it = std::lower_bound(support_.begin(), support_.end(), k,
                               [](const DegreeMass& m, int key) { return m.k < key; });
    return (it != support_.end() && it->k == k) ? it->p : 0.0;
}

int default_k_max(std::size_t n)
{
    auto k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    // guard against sqrt rounding just above an exact square
    while (k > 1 && static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(k - 1) >= n) {
        --k;
    }
    return k;
}

std::vector<int> sample_degree_sequence(const DegreeDistribution& dist, std::size_t n, Rng& rng)
{
    if (n < 2) {
        throw std::invalid_argument("degree sequence needs n >= 2");
    }
    const auto support = dist.support();
    std::vector<double> cdf(support.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        acc += support[i].p;
        cdf[i] = acc;
    }
    auto draw = [&]() {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        return support[static_cast<std::size_t>(it - cdf.begin())].k;
    };

    std::vector<int> degrees(n);
    long long total = 0;
    for (auto& d : degrees) {
        d = draw();
        total += d;
    }
    constexpr int max_parity_redraws = 1000;
    for (int attempt = 0; total % 2 != 0; ++attempt) {
        if (attempt == max_parity_redraws) {
            throw GraphBuildError("could not reach an even degree sum after " +
                                  std::to_string(max_parity_redraws) + " redraws");
        }
        const auto i = rng.index(n);
        total -= degrees[i];
        degrees[i] = draw();
        total += degrees[i];
    }
    return degrees;
}

namespace {

std::uint64_t edge_key(NodeId a, NodeId b)
{
    if (a > b) {
        std::swap(a, b);
    }
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

Graph build_configuration_graph(std::span<const int> degrees, Rng& rng)
{
    const std::size_t n = degrees.size();
    long long total = 0;
    int largest = 0;
    for (int d : degrees) {
        if (d < 0) {
            throw std::invalid_argument("negative degree");
        }
        total += d;
        largest = std::max(largest, d);
    }
    if (total % 2 != 0) {
        throw std::invalid_argument("degree sum is odd");
    }
    if (largest > total - largest) {
        throw GraphBuildError("largest degree exceeds the sum of the others");
    }

    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < n; ++i) {
        stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[i]), static_cast<NodeId>(i));
    }
    for (std::size_t i = stubs.size(); i > 1; --i) {
        std::swap(stubs[i - 1], stubs[rng.index(i)]);
    }

    const std::size_t m = stubs.size() / 2;
    std::vector<Edge> edges(m);
    std::unordered_map<std::uint64_t, int> multiplicity;
    multiplicity.reserve(m * 2);
    for (std::size_t e = 0; e < m; ++e) {
        edges[e] = {stubs[2 * e], stubs[2 * e + 1]};
        ++multiplicity[edge_key(edges[e].first, edges[e].second)];
    }

    auto is_bad = [&](const Edge& e) {
        return e.first == e.second || multiplicity[edge_key(e.first, e.second)] > 1;
    };
    std::vector<std::size_t> bad;
    for (std::size_t e = 0; e < m; ++e) {
        if (is_bad(edges[e])) {
            bad.push_back(e);
        }
    }

    const std::size_t max_attempts = 100 * std::max<std::size_t>(m, 1);
    std::size_t attempts = 0;
    while (!bad.empty()) {
        // lazily drop entries that earlier swaps already fixed
        const std::size_t slot = rng.index(bad.size());
        const std::size_t e1 = bad[slot];
        if (!is_bad(edges[e1])) {
            bad[slot] = bad.back();
            bad.pop_back();
            continue;
        }
        if (attempts++ == max_attempts) {
            throw GraphBuildError("degree sequence not realized as a simple graph after " +
                                  std::to_string(max_attempts) + " swap attempts");
        }
        const std::size_t e2 = rng.index(m);
        if (e2 == e1) {
            continue;
        }
        auto [a, b] = edges[e1];
        auto [c, d] = edges[e2];
        if (rng.bits() & 1U) {
            std::swap(c, d);
        }
        // candidate rewiring (a,b),(c,d) -> (a,c),(b,d)
        if (a == c || b == d) {
            continue;
        }
        const auto k1 = edge_key(a, c);
        const auto k2 = edge_key(b, d);
        if (k1 == k2 || multiplicity[k1] > 0 || multiplicity[k2] > 0) {
            continue;
        }
        --multiplicity[edge_key(a, b)];
        --multiplicity[edge_key(edges[e2].first, edges[e2].second)];
        ++multiplicity[k1];
        ++multiplicity[k2];
        edges[e1] = {a, c};
        edges[e2] = {b, d};
        for (std::size_t idx : {e1, e2}) {
            if (is_bad(edges[idx])) {
                bad.push_back(idx);
            }
        }
    }

    for (auto& e : edges) {
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
}

DegreeDistribution excess_degree_distribution(const DegreeDistribution& dist)
{
    if (!(dist.mean() > 0.0)) {
        throw std::invalid_argument("excess degree distribution needs a positive mean degree");
    }
    std::vector<DegreeMass> q;
    for (const auto& [k, p] : dist.support()) {
        if (k >= 1) {
            q.push_back({k - 1, k * p / dist.mean()});
        }
    }
    return DegreeDistribution(std::move(q), DegreeDistribution::Kind::excess);
}

double global_clustering(const Graph& g)
{
    double triangles_x3 = 0.0;
    double triples = 0.0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto row = g.neighbors(i);
        const double k = static_cast<double>(row.size());
        triples += k * (k - 1.0) / 2.0;
        for (std::size_t a = 0; a < row.size(); ++a) {
            for (std::size_t b = a + 1; b < row.size(); ++b) {
                if (g.has_edge(row[a], row[b])) {
                    triangles_x3 += 1.0;
                }
            }
        }
    }
    return triples > 0.0 ? triangles_x3 / triples : 0.0;
}

} // namespace idtnet

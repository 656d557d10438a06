#include "decwvc/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "decwvc/rng.hpp"

namespace decwvc {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// G(n, p) with p = D/(n-1), so the expected average degree is exactly D.
EdgeList erdos_renyi(std::size_t n, unsigned target_degree, Rng& rng) {
    const double p = static_cast<double>(target_degree) / static_cast<double>(n - 1);
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(p * 0.5 * static_cast<double>(n) *
                                           static_cast<double>(n - 1)) +
                  16);
    for (VertexId u = 1; u <= n; ++u) {
        for (VertexId v = u + 1; v <= n; ++v) {
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
        }
    }
    return edges;
}

// Preferential attachment. Each new vertex attaches to an alternating count
// of floor(D/2) / ceil(D/2) distinct existing vertices (fractional Bresenham
// accumulation), chosen proportionally to degree, so the expected average
// degree lands on D even when D is odd.
EdgeList barabasi_albert(std::size_t n, unsigned target_degree, Rng& rng) {
    const double half = static_cast<double>(target_degree) / 2.0;
    const auto m_hi = static_cast<std::size_t>(std::ceil(half));
    const std::size_t seed_size = std::min(n, std::max<std::size_t>(2, m_hi + 1));

    EdgeList edges;
    // endpoints holds every edge endpoint once; drawing uniformly from it is
    // degree-proportional sampling.
    std::vector<VertexId> endpoints;
    for (VertexId u = 1; u <= seed_size; ++u) {
        for (VertexId v = u + 1; v <= seed_size; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }

    double acc = 0.0;
    std::vector<VertexId> targets;
    for (VertexId w = static_cast<VertexId>(seed_size) + 1; w <= n; ++w) {
        acc += half;
        auto m = static_cast<std::size_t>(acc);
        acc -= static_cast<double>(m);
        m = std::min<std::size_t>(m, w - 1);

        targets.clear();
        std::size_t draws = 0;
        const std::size_t max_draws = 32 * (m + 1);
        while (targets.size() < m && draws < max_draws) {
            ++draws;
            VertexId t = endpoints[rng.uniform_index(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                targets.push_back(t);
            }
        }
        // Deterministic fallback; only reachable on degenerate tiny inputs.
        for (VertexId t = 1; targets.size() < m && t < w; ++t) {
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                targets.push_back(t);
            }
        }

        for (VertexId t : targets) {
            edges.emplace_back(t, w);
            endpoints.push_back(t);
            endpoints.push_back(w);
        }
    }
    return edges;
}

// Ring lattice of even degree k = nearest even to 4D/5, then one shortcut
// trial per lattice edge with probability p = D/k - 1, so the expected
// average degree is k(1 + p) = D with roughly a quarter of it contributed by
// shortcuts. Shortcuts are added, never rewired. A ring degree of D exactly
// would leave no shortcut budget and degenerate into a plain lattice.
EdgeList newman_watts_strogatz(std::size_t n, unsigned target_degree, Rng& rng) {
    const unsigned k = std::max(
        2u, 2u * static_cast<unsigned>(std::lround(0.4 * target_degree)));
    const double p_short = std::clamp(
        static_cast<double>(target_degree) / static_cast<double>(k) - 1.0, 0.0,
        1.0);

    EdgeList edges;
    std::unordered_set<std::uint64_t> seen;
    auto add = [&](VertexId u, VertexId v) {
        if (u == v) return false;
        if (!seen.insert(edge_key(u, v)).second) return false;
        edges.emplace_back(u, v);
        return true;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (unsigned j = 1; j <= k / 2; ++j) {
            add(static_cast<VertexId>(i + 1),
                static_cast<VertexId>((i + j) % n + 1));
        }
    }

    const std::size_t lattice_edges = edges.size();
    for (std::size_t e = 0; e < lattice_edges; ++e) {
        if (!rng.bernoulli(p_short)) continue;
        const VertexId u = edges[e].first;
        for (int attempt = 0; attempt < 64; ++attempt) {
            const auto w = static_cast<VertexId>(rng.uniform_index(n) + 1);
            if (add(u, w)) break;
        }
    }
    return edges;
}

EdgeList generate_once(const Topology& t, std::uint64_t seed) {
    Rng rng(seed);
    switch (t.kind) {
        case TopologyKind::Random:
            return erdos_renyi(t.order, t.target_avg_degree, rng);
        case TopologyKind::ScaleFree:
            return barabasi_albert(t.order, t.target_avg_degree, rng);
        case TopologyKind::SmallWorld:
            return newman_watts_strogatz(t.order, t.target_avg_degree, rng);
    }
    throw std::invalid_argument("generate: unknown topology kind");
}

}  // namespace

Graph generate(const Topology& topology, std::uint64_t seed) {
    if (topology.order < 2) {
        throw std::invalid_argument("generate: order must be at least 2");
    }
    if (topology.target_avg_degree >= topology.order) {
        throw std::invalid_argument(
            "generate: target average degree " +
            std::to_string(topology.target_avg_degree) +
            " must be smaller than order " + std::to_string(topology.order));
    }
    if (topology.target_avg_degree == 0) {
        throw std::invalid_argument("generate: target average degree must be positive");
    }
    if (topology.kind == TopologyKind::SmallWorld && topology.target_avg_degree < 2) {
        throw std::invalid_argument(
            "generate: small-world topology needs target average degree >= 2");
    }

    const double target = topology.target_avg_degree;
    EdgeList best;
    double best_gap = -1.0;
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        EdgeList edges = generate_once(topology, derive_seed(seed, attempt));
        const double realized = 2.0 * static_cast<double>(edges.size()) /
                                static_cast<double>(topology.order);
        const double gap = std::abs(realized - target);
        if (gap <= 0.1 * target) {
            return Graph(topology.order, edges);
        }
        if (best_gap < 0.0 || gap < best_gap) {
            best_gap = gap;
            best = std::move(edges);
        }
    }
    return Graph(topology.order, best);
}

Graph assign_weights(const Graph& graph, const WeightDistribution& dist,
                     std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> weights(graph.order());
    switch (dist.kind) {
        case WeightKind::Uniform: {
            const auto lo = static_cast<std::int64_t>(std::llround(dist.min));
            const auto hi = static_cast<std::int64_t>(std::llround(dist.max));
            for (auto& w : weights) {
                w = static_cast<double>(rng.uniform_int(lo, hi));
            }
            break;
        }
        case WeightKind::PowerLaw: {
            // Inverse transform of f(x) ~ x^-a truncated to [min, max], a != 1:
            // x = (min^(1-a) + u * (max^(1-a) - min^(1-a)))^(1/(1-a))
            const double b = 1.0 - dist.exponent;
            const double lo = std::pow(dist.min, b);
            const double hi = std::pow(dist.max, b);
            for (auto& w : weights) {
                const double u = rng.uniform_real();
                w = std::pow(lo + u * (hi - lo), 1.0 / b);
                w = std::clamp(w, dist.min, dist.max);
            }
            break;
        }
    }
    return graph.with_weights(std::move(weights));
}

double power_law_mean(const WeightDistribution& dist) {
    const double b = 1.0 - dist.exponent;
    const double c = 2.0 - dist.exponent;
    return (b / c) * (std::pow(dist.max, c) - std::pow(dist.min, c)) /
           (std::pow(dist.max, b) - std::pow(dist.min, b));
}

}  // namespace decwvc

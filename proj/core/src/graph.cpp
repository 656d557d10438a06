#include "decwvc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace decwvc {

namespace {

std::vector<double> unit_weights(std::size_t order) {
    return std::vector<double>(order, 1.0);
}

}  // namespace

Graph::Graph(std::size_t order, const EdgeList& edges)
    : Graph(order, edges, unit_weights(order)) {}

Graph::Graph(std::size_t order, const EdgeList& edges, std::vector<double> weights)
    : order_(order), weights_(std::move(weights)), adjacency_(order) {
    if (weights_.size() != order_) {
        throw std::invalid_argument("graph: weight count " +
                                    std::to_string(weights_.size()) +
                                    " does not match order " +
                                    std::to_string(order_));
    }
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("graph: vertex weights must be finite and positive");
        }
        total_weight_ += w;
    }
    for (auto [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        }
        if (u < 1 || u > order_ || v < 1 || v > order_) {
            throw std::invalid_argument("graph: edge endpoint out of range");
        }
        adjacency_[u - 1].push_back(v);
        adjacency_[v - 1].push_back(u);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
            throw std::invalid_argument("graph: parallel edge");
        }
    }
    edge_count_ = edges.size();
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& adj = adjacency_[u - 1];
    return std::binary_search(adj.begin(), adj.end(), v);
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < order_; ++i) {
        const auto u = static_cast<VertexId>(i + 1);
        for (VertexId v : adjacency_[i]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_weights(std::vector<double> weights) const {
    return Graph(order_, edges(), std::move(weights));
}

bool Graph::operator==(const Graph& other) const {
    return order_ == other.order_ && weights_ == other.weights_ &&
           adjacency_ == other.adjacency_;
}

}  // namespace decwvc

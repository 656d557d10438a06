#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace decwvc {

// Vertex identifiers are positive integers, contiguous 1..|V| within a graph.
using VertexId = std::uint32_t;

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Immutable weighted undirected graph.
//
// Invariants enforced at construction:
//  - adjacency is symmetric and irreflexive (no self-loops, no parallel edges)
//  - every vertex weight is strictly positive
//  - vertex ids are 1..order()
class Graph {
public:
    // Builds a graph with all weights set to 1. Edge endpoints must be in
    // [1, order]; duplicates (in either orientation) and self-loops throw.
    Graph(std::size_t order, const EdgeList& edges);

    Graph(std::size_t order, const EdgeList& edges, std::vector<double> weights);

    std::size_t order() const { return order_; }
    std::size_t edge_count() const { return edge_count_; }

    double weight(VertexId v) const { return weights_[v - 1]; }
    const std::vector<double>& weights() const { return weights_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_[v - 1].data(), adjacency_[v - 1].size()};
    }
    std::size_t degree(VertexId v) const { return adjacency_[v - 1].size(); }

    bool has_edge(VertexId u, VertexId v) const;

    double total_weight() const { return total_weight_; }
    double average_degree() const {
        return order_ == 0 ? 0.0
                           : 2.0 * static_cast<double>(edge_count_) /
                                 static_cast<double>(order_);
    }

    // Canonical edge list: pairs with u < v, sorted lexicographically.
    EdgeList edges() const;

    // Structural copy with new weights (size must equal order, all > 0).
    Graph with_weights(std::vector<double> weights) const;

    bool operator==(const Graph& other) const;

private:
    std::size_t order_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<double> weights_;
    std::vector<std::vector<VertexId>> adjacency_;  // sorted per vertex
    double total_weight_ = 0.0;
};

}  // namespace decwvc

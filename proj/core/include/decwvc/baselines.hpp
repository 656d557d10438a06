#pragma once

#include <vector>

#include "decwvc/graph.hpp"

namespace decwvc {

struct SolverResult {
    std::vector<VertexId> cover;  // sorted
    double cover_weight = 0.0;
    bool exact = false;  // true only for the brute-force solver
};

// Exact minimum-weight vertex cover by branch-and-bound enumeration.
// Deterministic: among equal-weight optima, returns the lexicographically
// smallest vertex set. Refuses graphs with more than 24 vertices.
SolverResult brute_force_mwvc(const Graph& graph);

// Centralized greedy: repeatedly adds the vertex minimizing
// weight / (incident uncovered edges), ties to the highest id, until every
// edge is covered.
SolverResult greedy_mwvc(const Graph& graph);

// Removes redundant cover members (all neighbors covered), examining
// vertices in decreasing weight order. Input must be a valid cover; the
// result is a valid cover with no removable vertex left.
std::vector<VertexId> redundancy_prune(const Graph& graph,
                                       const std::vector<VertexId>& cover);

}  // namespace decwvc

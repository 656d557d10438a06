#include "decwvc/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace decwvc {

namespace {

constexpr std::size_t kBruteForceLimit = 24;

std::vector<VertexId> mask_to_cover(std::uint32_t mask, std::size_t n) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) out.push_back(static_cast<VertexId>(i + 1));
    }
    return out;
}

}  // namespace

SolverResult brute_force_mwvc(const Graph& graph) {
    const std::size_t n = graph.order();
    if (n > kBruteForceLimit) {
        throw std::invalid_argument(
            "brute_force_mwvc: refuses graphs with more than " +
            std::to_string(kBruteForceLimit) + " vertices");
    }

    std::uint32_t best_mask = 0;
    double best_weight = 0.0;
    bool have_best = false;

    // Depth-first over vertices in id order, "in" branch first: solutions are
    // visited in lexicographic set order, so the first one found at the
    // optimal weight is the lexicographically smallest optimum. Excluding a
    // vertex forces all later neighbors in; earlier neighbors already forced
    // this vertex when they were excluded.
    std::function<void(std::size_t, double, std::uint32_t, std::uint32_t)> visit =
        [&](std::size_t idx, double weight, std::uint32_t chosen,
            std::uint32_t forced) {
            if (have_best && weight >= best_weight) return;
            if (idx == n) {
                best_mask = chosen;
                best_weight = weight;
                have_best = true;
                return;
            }
            const auto v = static_cast<VertexId>(idx + 1);
            const std::uint32_t bit = 1u << idx;

            visit(idx + 1, weight + graph.weight(v), chosen | bit, forced);

            if (forced & bit) return;
            std::uint32_t next_forced = forced;
            for (VertexId u : graph.neighbors(v)) {
                if (u > v) next_forced |= 1u << (u - 1);
            }
            visit(idx + 1, weight, chosen, next_forced);
        };
    visit(0, 0.0, 0, 0);

    SolverResult result;
    result.cover = mask_to_cover(best_mask, n);
    result.cover_weight = best_weight;
    result.exact = true;
    return result;
}

SolverResult greedy_mwvc(const Graph& graph) {
    const std::size_t n = graph.order();
    std::vector<std::uint8_t> in_cover(n + 1, 0);
    std::vector<std::size_t> uncovered(n + 1, 0);  // uncovered incident edges
    std::uint64_t open_edges = 0;
    for (VertexId v = 1; v <= n; ++v) {
        uncovered[v] = graph.degree(v);
        open_edges += graph.degree(v);
    }
    open_edges /= 2;

    SolverResult result;
    while (open_edges > 0) {
        // argmin weight/uncovered, exact rational comparison, ties to the
        // highest id (which the ascending scan yields for >=).
        VertexId best = 0;
        for (VertexId v = 1; v <= n; ++v) {
            if (in_cover[v] || uncovered[v] == 0) continue;
            if (best == 0 ||
                graph.weight(v) * static_cast<double>(uncovered[best]) <=
                    graph.weight(best) * static_cast<double>(uncovered[v])) {
                best = v;
            }
        }
        in_cover[best] = 1;
        open_edges -= uncovered[best];
        for (VertexId u : graph.neighbors(best)) {
            if (!in_cover[u] && uncovered[u] > 0) --uncovered[u];
        }
        uncovered[best] = 0;
        result.cover.push_back(best);
        result.cover_weight += graph.weight(best);
    }
    std::sort(result.cover.begin(), result.cover.end());
    return result;
}

std::vector<VertexId> redundancy_prune(const Graph& graph,
                                       const std::vector<VertexId>& cover) {
    std::vector<std::uint8_t> in_cover(graph.order() + 1, 0);
    for (VertexId v : cover) in_cover[v] = 1;

    std::vector<VertexId> order(cover);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (graph.weight(a) != graph.weight(b)) {
            return graph.weight(a) > graph.weight(b);
        }
        return a > b;
    });

    // One pass suffices: removals never make another vertex removable.
    for (VertexId v : order) {
        bool removable = true;
        for (VertexId u : graph.neighbors(v)) {
            if (!in_cover[u]) {
                removable = false;
                break;
            }
        }
        if (removable) in_cover[v] = 0;
    }

    std::vector<VertexId> out;
    for (VertexId v = 1; v <= graph.order(); ++v) {
        if (in_cover[v]) out.push_back(v);
    }
    return out;
}

}  // namespace decwvc

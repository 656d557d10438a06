#include "decwvc/protocol.hpp"

#include <stdexcept>

namespace decwvc {

std::size_t gain(std::span<const VertexId> neighbors,
                 const std::vector<std::uint8_t>& covered) {
    std::size_t g = 0;
    for (VertexId u : neighbors) {
        if (!covered[u]) ++g;
    }
    return g;
}

double score(double weight, std::size_t gain) {
    if (gain == 0) {
        throw std::domain_error("score: undefined at gain 0");
    }
    return weight / static_cast<double>(gain);
}

VertexId select_candidate(const ScoredCandidate& self,
                          std::span<const ScoredCandidate> uncovered_neighbors) {
    ScoredCandidate best = self;
    for (const auto& c : uncovered_neighbors) {
        if (score_less(c.score, best.score) ||
            (score_equal(c.score, best.score) && c.id > best.id)) {
            best = c;
        }
    }
    return best.id;
}

DropDecision optimize_decision(VertexId self, std::span<const std::int64_t> replies,
                               OptimizeRule rule) {
    bool all_silent = true;
    bool any_higher = false;
    bool any_lower = false;
    for (std::int64_t r : replies) {
        if (r == -1) continue;
        all_silent = false;
        if (r > static_cast<std::int64_t>(self)) {
            any_higher = true;
        } else {
            any_lower = true;
        }
    }
    switch (rule) {
        case OptimizeRule::Permissive:
            return (all_silent || any_higher) ? DropDecision::Leave
                                              : DropDecision::Stay;
        case OptimizeRule::Safe:
            return any_lower ? DropDecision::Stay : DropDecision::Leave;
    }
    throw std::invalid_argument("optimize_decision: unknown rule");
}

bool is_settled(bool in_cover, std::span<const VertexId> neighbors,
                const std::vector<std::uint8_t>& covered) {
    if (in_cover) return true;
    for (VertexId u : neighbors) {
        if (!covered[u]) return false;
    }
    return true;
}

}  // namespace decwvc

#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "decwvc/graph.hpp"

namespace decwvc {

// Per-vertex protocol state. `known_*` vectors cache announcements received
// from the neighborhood; both are subsets of the vertex's neighbor set.
// in_cover only flips true -> false during the optimize phase; settled never
// flips back.
struct NodeState {
    VertexId id = 0;
    double weight = 0.0;
    bool in_cover = false;
    bool settled = false;
    std::vector<VertexId> known_covered_neighbors;
    std::vector<VertexId> known_settled_neighbors;
};

// A candidate's selection key, kept as the exact rational weight/gain.
// Comparisons cross-multiply instead of dividing so that equal rationals are
// detected exactly (the highest-id tie rule depends on that); with the
// integer weights used by the testbed the products are exact in a double.
struct Score {
    double weight = 0.0;
    std::uint32_t gain = 0;

    double value() const { return weight / static_cast<double>(gain); }
};

inline bool score_less(Score a, Score b) {
    return a.weight * static_cast<double>(b.gain) <
           b.weight * static_cast<double>(a.gain);
}

inline bool score_equal(Score a, Score b) {
    return a.weight * static_cast<double>(b.gain) ==
           b.weight * static_cast<double>(a.gain);
}

// The protocol's message vocabulary.
struct ScoreExchange { Score score; };
struct Include {};
struct CoverAnnounce {};
struct SettledAnnounce { VertexId id; };
struct CommunicateDrop { VertexId id; };
struct DropReply { std::int64_t value; };  // -1 (staying) or the sender's id
struct RevokeDrop { VertexId id; };

struct Message {
    VertexId from = 0;
    VertexId to = 0;
    std::variant<ScoreExchange, Include, CoverAnnounce, SettledAnnounce,
                 CommunicateDrop, DropReply, RevokeDrop>
        body;
};

// Conflict-resolution rule applied when adjacent redundant cover members all
// try to drop in the optimize phase.
enum class OptimizeRule {
    // Drop when every reply is -1 or any conflicting neighbor has a higher
    // id. Pairwise this is sound, but on candidate chains of length >= 3 two
    // adjacent nodes can both drop, breaking cover validity. Kept for
    // fidelity and as the hazard under test.
    Permissive,
    // Drop only when this node's id is the strict minimum among conflicting
    // candidate neighbors. Drops form an independent set, so validity is
    // preserved. Default.
    Safe,
};

enum class DropDecision { Stay, Leave };

// Number of uncovered neighbors: how many additional vertices would become
// covered if this node entered the cover. Equals the degree initially.
// `covered` is indexed by vertex id (size order+1).
std::size_t gain(std::span<const VertexId> neighbors,
                 const std::vector<std::uint8_t>& covered);

// weight / gain; lower is fitter. Undefined at gain 0 (such a node is
// settled, never a candidate); throws std::domain_error.
double score(double weight, std::size_t gain);

struct ScoredCandidate {
    VertexId id = 0;
    Score score;
};

// Argmin of score over the closed candidate set {self} + uncovered
// neighbors; exact ties go to the highest id. The result is invariant under
// permutation of `uncovered_neighbors`.
VertexId select_candidate(const ScoredCandidate& self,
                          std::span<const ScoredCandidate> uncovered_neighbors);

// Applies the drop rule to the replies gathered from the full neighborhood.
// Reply values are -1 or the replying neighbor's id.
DropDecision optimize_decision(VertexId self, std::span<const std::int64_t> replies,
                               OptimizeRule rule);

// A node is settled when it is in the cover or all its neighbors are.
bool is_settled(bool in_cover, std::span<const VertexId> neighbors,
                const std::vector<std::uint8_t>& covered);

}  // namespace decwvc

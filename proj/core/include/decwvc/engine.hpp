#pragma once

#include <cstdint>
#include <vector>

#include "decwvc/graph.hpp"
#include "decwvc/protocol.hpp"

namespace decwvc {

// Message counts per kind. Accounting rule: every directed point-to-point
// transmission counts 1, a broadcast to a neighborhood of size d counts d,
// a score exchange with an uncovered neighbor counts 2 (the score travels
// each way), and silent drops count 0.
struct MessageTally {
    std::uint64_t score_exchange = 0;
    std::uint64_t include = 0;
    std::uint64_t cover_announce = 0;
    std::uint64_t settled = 0;
    std::uint64_t communicate_drop = 0;
    std::uint64_t drop_reply = 0;
    std::uint64_t revoke_drop = 0;

    std::uint64_t total() const {
        return score_exchange + include + cover_announce + settled +
               communicate_drop + drop_reply + revoke_drop;
    }
};

struct RunReport {
    std::vector<VertexId> cover;  // sorted
    double cover_weight = 0.0;
    double apw_numerator = 0.0;    // cover weight
    double apw_denominator = 0.0;  // total graph weight
    double apw = 0.0;
    std::uint32_t selection_rounds = 0;
    std::uint32_t rounds = 0;  // selection_rounds + 1 (the optimize round)
    MessageTally tally;
    std::uint64_t total_messages = 0;
    double mpn = 0.0;
    double elapsed_ms = 0.0;  // process CPU time of the run
    bool valid = false;
};

// true iff every edge has at least one endpoint in the cover. `cover` is a
// set of vertex ids of the graph.
bool validate_cover(const Graph& graph, const std::vector<VertexId>& cover);

enum class Phase { Selection, Optimize, Done };

// Deterministic simulation of the protocol on one graph.
//
// A selection round is one sweep over the nodes in ascending id order. At
// its turn an unsettled node exchanges scores with its currently uncovered
// neighbors, picks the argmin-score member of its closed uncovered
// neighborhood and includes it. Include effects are visible immediately:
// the chosen vertex announces its cover membership at once and nodes that
// thereby become settled announce it at once, exactly as the per-node loops
// would behave. Rounds repeat until every node is settled, then a single
// optimize round runs on the stable cover.
class Simulation {
public:
    Simulation(const Graph& graph, OptimizeRule rule);

    // One selection sweep. Returns false (and changes nothing) when every
    // node is already settled. Requires phase Selection.
    bool step_selection();

    // The single optimize round. Requires every node settled; transitions
    // Selection -> Optimize -> Done.
    void step_optimize();

    bool all_settled() const { return unsettled_ == 0; }
    Phase phase() const { return phase_; }
    std::uint32_t selection_rounds() const { return selection_rounds_; }
    const MessageTally& tally() const { return tally_; }
    const NodeState& node(VertexId v) const { return nodes_[v - 1]; }
    const Graph& graph() const { return graph_; }

    std::vector<VertexId> cover() const;

    // Runs selection to settlement plus the optimize round and reports.
    RunReport run();

private:
    std::size_t uncovered_neighbors(VertexId v) const;
    void cover_vertex(VertexId v);
    void settle(VertexId v);

    const Graph& graph_;
    OptimizeRule rule_;
    Phase phase_ = Phase::Selection;
    std::uint32_t selection_rounds_ = 0;
    MessageTally tally_;
    std::vector<NodeState> nodes_;
    std::vector<std::uint8_t> covered_;  // indexed by vertex id
    std::size_t unsettled_ = 0;
};

// One optimize round applied to an arbitrary valid-or-not cover, with every
// node treated as settled. Exposed separately so redundant-cover scenarios
// can be driven directly.
struct OptimizeOutcome {
    std::vector<VertexId> cover;  // sorted
    std::vector<VertexId> dropped;
    MessageTally tally;
};
OptimizeOutcome optimize_cover(const Graph& graph,
                               const std::vector<VertexId>& cover,
                               OptimizeRule rule);

// Convenience wrapper: full protocol run on `graph`.
RunReport run(const Graph& graph, OptimizeRule rule = OptimizeRule::Safe);

}  // namespace decwvc

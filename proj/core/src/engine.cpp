#include "decwvc/engine.hpp"

#include <ctime>
#include <stdexcept>

namespace decwvc {

namespace {

struct DropRound {
    std::vector<VertexId> dropped;  // ascending id
    MessageTally tally;
};

// Optimize-round core over a cover given as per-id flags. Candidates
// (in-cover nodes whose whole neighborhood is covered) and replies are all
// evaluated against the same pre-round state; drops apply afterwards.
DropRound optimize_round_impl(const Graph& graph,
                              const std::vector<std::uint8_t>& covered,
                              OptimizeRule rule) {
    const auto n = graph.order();
    std::vector<std::uint8_t> candidate(n + 1, 0);
    for (VertexId v = 1; v <= n; ++v) {
        if (!covered[v]) continue;
        bool redundant = true;
        for (VertexId u : graph.neighbors(v)) {
            if (!covered[u]) {
                redundant = false;
                break;
            }
        }
        candidate[v] = redundant;
    }

    DropRound out;
    std::vector<std::int64_t> replies;
    for (VertexId v = 1; v <= n; ++v) {
        if (!candidate[v]) continue;
        const auto deg = graph.degree(v);
        out.tally.communicate_drop += deg;
        out.tally.drop_reply += deg;
        replies.clear();
        for (VertexId u : graph.neighbors(v)) {
            replies.push_back(candidate[u] ? static_cast<std::int64_t>(u) : -1);
        }
        if (optimize_decision(v, replies, rule) == DropDecision::Leave) {
            out.dropped.push_back(v);  // leaves silently, no message
        } else {
            out.tally.revoke_drop += deg;
        }
    }
    return out;
}

}  // namespace

bool validate_cover(const Graph& graph, const std::vector<VertexId>& cover) {
    std::vector<std::uint8_t> covered(graph.order() + 1, 0);
    for (VertexId v : cover) {
        if (v < 1 || v > graph.order()) {
            throw std::invalid_argument("validate_cover: vertex id out of range");
        }
        covered[v] = 1;
    }
    for (VertexId v = 1; v <= graph.order(); ++v) {
        if (covered[v]) continue;
        for (VertexId u : graph.neighbors(v)) {
            if (u > v && !covered[u]) return false;
        }
    }
    return true;
}

Simulation::Simulation(const Graph& graph, OptimizeRule rule)
    : graph_(graph), rule_(rule), covered_(graph.order() + 1, 0) {
    nodes_.resize(graph.order());
    for (VertexId v = 1; v <= graph.order(); ++v) {
        NodeState& st = nodes_[v - 1];
        st.id = v;
        st.weight = graph.weight(v);
        st.settled = graph.degree(v) == 0;  // isolated vertices are born settled
        if (!st.settled) ++unsettled_;
    }
}

std::vector<VertexId> Simulation::cover() const {
    std::vector<VertexId> out;
    for (const auto& st : nodes_) {
        if (st.in_cover) out.push_back(st.id);
    }
    return out;
}

std::size_t Simulation::uncovered_neighbors(VertexId v) const {
    return graph_.degree(v) - nodes_[v - 1].known_covered_neighbors.size();
}

void Simulation::settle(VertexId v) {
    NodeState& st = nodes_[v - 1];
    st.settled = true;
    --unsettled_;
    tally_.settled += graph_.degree(v);
    for (VertexId u : graph_.neighbors(v)) {
        nodes_[u - 1].known_settled_neighbors.push_back(v);
    }
}

// Immediate include effect: v joins the cover and announces it, and every
// node settled by that announcement (v itself, or neighbors losing their
// last uncovered neighbor) announces as well.
void Simulation::cover_vertex(VertexId v) {
    covered_[v] = 1;
    nodes_[v - 1].in_cover = true;
    tally_.cover_announce += graph_.degree(v);
    for (VertexId u : graph_.neighbors(v)) {
        nodes_[u - 1].known_covered_neighbors.push_back(v);
    }
    if (!nodes_[v - 1].settled) settle(v);
    for (VertexId u : graph_.neighbors(v)) {
        if (!nodes_[u - 1].settled && uncovered_neighbors(u) == 0) settle(u);
    }
}

bool Simulation::step_selection() {
    if (phase_ != Phase::Selection) {
        throw std::logic_error("step_selection: selection phase is over");
    }
    if (all_settled()) return false;

    std::vector<ScoredCandidate> contest;
    bool any_active = false;
    for (VertexId n = 1; n <= graph_.order(); ++n) {
        if (nodes_[n - 1].settled) continue;
        any_active = true;

        // Unsettled means uncovered with at least one uncovered neighbor, so
        // every score consulted here has gain >= 1.
        contest.clear();
        for (VertexId u : graph_.neighbors(n)) {
            if (covered_[u]) continue;
            contest.push_back(
                {u, Score{graph_.weight(u),
                          static_cast<std::uint32_t>(uncovered_neighbors(u))}});
        }
        tally_.score_exchange += 2 * contest.size();

        const ScoredCandidate self{
            n, Score{graph_.weight(n),
                     static_cast<std::uint32_t>(uncovered_neighbors(n))}};
        const VertexId target = select_candidate(self, contest);
        if (target != n) ++tally_.include;  // self-selection sends nothing
        cover_vertex(target);
    }
    if (any_active) ++selection_rounds_;
    return any_active;
}

void Simulation::step_optimize() {
    if (phase_ != Phase::Selection) {
        throw std::logic_error("step_optimize: already ran");
    }
    if (!all_settled()) {
        throw std::logic_error("step_optimize: requires global settlement");
    }
    phase_ = Phase::Optimize;
    DropRound round = optimize_round_impl(graph_, covered_, rule_);
    tally_.communicate_drop += round.tally.communicate_drop;
    tally_.drop_reply += round.tally.drop_reply;
    tally_.revoke_drop += round.tally.revoke_drop;
    for (VertexId v : round.dropped) {
        nodes_[v - 1].in_cover = false;
        covered_[v] = 0;
    }
    phase_ = Phase::Done;
}

RunReport Simulation::run() {
    if (phase_ != Phase::Selection || selection_rounds_ != 0) {
        throw std::logic_error("run: simulation already advanced");
    }
    const std::clock_t t0 = std::clock();
    while (step_selection()) {
    }
    step_optimize();
    const std::clock_t t1 = std::clock();

    RunReport r;
    r.cover = cover();
    for (VertexId v : r.cover) r.cover_weight += graph_.weight(v);
    r.apw_numerator = r.cover_weight;
    r.apw_denominator = graph_.total_weight();
    r.apw = r.apw_denominator > 0.0 ? r.apw_numerator / r.apw_denominator : 0.0;
    r.selection_rounds = selection_rounds_;
    r.rounds = selection_rounds_ + 1;
    r.tally = tally_;
    r.total_messages = tally_.total();
    r.mpn = static_cast<double>(r.total_messages) /
            static_cast<double>(graph_.order());
    r.elapsed_ms =
        1000.0 * static_cast<double>(t1 - t0) / static_cast<double>(CLOCKS_PER_SEC);
    r.valid = validate_cover(graph_, r.cover);
    return r;
}

OptimizeOutcome optimize_cover(const Graph& graph,
                               const std::vector<VertexId>& cover,
                               OptimizeRule rule) {
    std::vector<std::uint8_t> covered(graph.order() + 1, 0);
    for (VertexId v : cover) {
        if (v < 1 || v > graph.order()) {
            throw std::invalid_argument("optimize_cover: vertex id out of range");
        }
        covered[v] = 1;
    }
    DropRound round = optimize_round_impl(graph, covered, rule);

    OptimizeOutcome out;
    out.tally = round.tally;
    out.dropped = round.dropped;
    for (VertexId v : round.dropped) covered[v] = 0;
    for (VertexId v = 1; v <= graph.order(); ++v) {
        if (covered[v]) out.cover.push_back(v);
    }
    return out;
}

RunReport run(const Graph& graph, OptimizeRule rule) {
    Simulation sim(graph, rule);
    return sim.run();
}

}  // namespace decwvc

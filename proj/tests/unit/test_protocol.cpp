#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "decwvc/generate.hpp"
#include "decwvc/protocol.hpp"

using namespace decwvc;

TEST_SUITE("protocol") {

TEST_CASE("gain counts uncovered neighbors") {
    std::vector<std::uint8_t> covered(6, 0);
    const std::vector<VertexId> nbrs{1, 2, 3, 4};
    CHECK(gain(nbrs, covered) == 4);  // initial gain equals the degree

    for (VertexId v : nbrs) covered[v] = 1;
    CHECK(gain(nbrs, covered) == 0);

    covered.assign(6, 0);
    covered[1] = 1;
    CHECK(gain({nbrs.data(), 3}, covered) == 2);  // {covered, unc, unc}
}

TEST_CASE("score is weight over gain, undefined at gain zero") {
    CHECK(score(20.0, 4) == 5.0);
    CHECK(score(100.0, 1) == 100.0);
    CHECK_THROWS_AS(score(50.0, 0), std::domain_error);
}

TEST_CASE("select_candidate picks the strict minimum") {
    const ScoredCandidate self{1, {5.0, 1}};
    const std::vector<ScoredCandidate> nbrs{{2, {3.0, 1}}, {3, {7.0, 1}}};
    CHECK(select_candidate(self, nbrs) == 2);
}

TEST_CASE("equal minima go to the highest id") {
    const ScoredCandidate self{1, {3.0, 1}};
    const std::vector<ScoredCandidate> nbrs{{2, {3.0, 1}}, {3, {3.0, 1}}};
    CHECK(select_candidate(self, nbrs) == 3);
}

TEST_CASE("a node with no uncovered neighbors selects itself") {
    CHECK(select_candidate({9, {2.5, 2}}, {}) == 9);
}

TEST_CASE("ties are detected on the exact rational, not the quotient") {
    // 10/3 == 20/6 exactly; with floating division both sides round, with
    // cross-multiplication the comparison is exact for integer inputs.
    CHECK(score_equal({10.0, 3}, {20.0, 6}));
    CHECK_FALSE(score_less({10.0, 3}, {20.0, 6}));
    const ScoredCandidate self{4, {10.0, 3}};
    const std::vector<ScoredCandidate> nbrs{{7, {20.0, 6}}};
    CHECK(select_candidate(self, nbrs) == 7);
}

TEST_CASE("selection is invariant under candidate permutation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ScoredCandidate> cands;
        const int n = 2 + static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) {
            cands.push_back({static_cast<VertexId>(i + 2),
                             Score{static_cast<double>(20 + rng() % 81),
                                   static_cast<std::uint32_t>(1 + rng() % 6)}});
        }
        const ScoredCandidate self{1, {static_cast<double>(20 + rng() % 81),
                                       static_cast<std::uint32_t>(1 + rng() % 6)}};
        const VertexId expected = select_candidate(self, cands);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::shuffle(cands.begin(), cands.end(), rng);
            CHECK(select_candidate(self, cands) == expected);
        }
    }
}

TEST_CASE("drop decision: all neighbors staying means leave") {
    const std::vector<std::int64_t> replies{-1, -1, -1};
    CHECK(optimize_decision(2, replies, OptimizeRule::Permissive) ==
          DropDecision::Leave);
    CHECK(optimize_decision(2, replies, OptimizeRule::Safe) ==
          DropDecision::Leave);
}

TEST_CASE("drop decision diverges on the middle of a candidate chain") {
    // Node 2 on the path 1-2-3 with all three candidates: the permissive rule
    // drops it (3 > 2) even though node 1 drops too; the safe rule keeps it.
    const std::vector<std::int64_t> replies{1, 3};
    CHECK(optimize_decision(2, replies, OptimizeRule::Permissive) ==
          DropDecision::Leave);
    CHECK(optimize_decision(2, replies, OptimizeRule::Safe) ==
          DropDecision::Stay);
}

TEST_CASE("drop decision: highest id among candidates stays under both rules") {
    const std::vector<std::int64_t> replies{1, 2};
    CHECK(optimize_decision(3, replies, OptimizeRule::Permissive) ==
          DropDecision::Stay);
    CHECK(optimize_decision(3, replies, OptimizeRule::Safe) ==
          DropDecision::Stay);
}

TEST_CASE("settled: in cover, or every neighbor covered") {
    std::vector<std::uint8_t> covered(4, 0);
    const std::vector<VertexId> nbrs{2, 3};
    CHECK(is_settled(true, nbrs, covered));
    CHECK_FALSE(is_settled(false, nbrs, covered));
    covered[2] = covered[3] = 1;
    CHECK(is_settled(false, nbrs, covered));
    CHECK(is_settled(false, {}, covered));  // isolated vertex
}

TEST_CASE("fresh graph: score equals weight over degree") {
    Graph g = assign_weights(generate({TopologyKind::Random, 64, 5}, 21),
                             WeightDistribution{WeightKind::Uniform}, 22);
    const std::vector<std::uint8_t> covered(g.order() + 1, 0);
    for (VertexId v = 1; v <= g.order(); ++v) {
        if (g.degree(v) == 0) continue;
        const auto gv = gain(g.neighbors(v), covered);
        CHECK(gv == g.degree(v));
        CHECK(score(g.weight(v), gv) ==
              g.weight(v) / static_cast<double>(g.degree(v)));
    }
}

TEST_CASE("message bodies carry their payloads") {
    Message m{3, 7, DropReply{-1}};
    CHECK(m.from == 3);
    CHECK(std::get<DropReply>(m.body).value == -1);
    m.body = ScoreExchange{{42.0, 2}};
    CHECK(std::get<ScoreExchange>(m.body).score.value() == 21.0);
    m.body = SettledAnnounce{3};
    CHECK(std::get<SettledAnnounce>(m.body).id == 3);
}

}  // TEST_SUITE

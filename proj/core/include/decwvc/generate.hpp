#pragma once

#include <cstdint>

#include "decwvc/graph.hpp"

namespace decwvc {

enum class TopologyKind {
    Random,      // Erdős–Rényi G(n, p)
    ScaleFree,   // Barabási–Albert preferential attachment
    SmallWorld,  // Newman–Watts–Strogatz ring lattice plus shortcuts
};

struct Topology {
    TopologyKind kind;
    std::size_t order;            // vertex count, >= 2
    unsigned target_avg_degree;   // expected 2|E|/|V|, must be < order
};

enum class WeightKind {
    Uniform,   // integer weights uniform on [20, 100]
    PowerLaw,  // density proportional to x^-0.5, truncated to [20, 100]
};

struct WeightDistribution {
    WeightKind kind = WeightKind::Uniform;
    double min = 20.0;
    double max = 100.0;
    double exponent = 0.5;  // PowerLaw only; decaying density x^-exponent
};

// Generates a synthetic graph (unit weights) with the requested topology.
// Deterministic given (topology, seed). The generator resamples with derived
// sub-seeds (bounded number of attempts) until the realized average degree is
// within 10% of the target, so the returned instance always honors that band
// for feasible parameters.
//
// Throws std::invalid_argument if order < 2, target_avg_degree >= order, or
// target_avg_degree < 2 for SmallWorld (the ring lattice needs degree 2).
Graph generate(const Topology& topology, std::uint64_t seed);

// Returns a structural copy of `graph` with freshly sampled vertex weights.
// Deterministic given seed. Uniform weights are sampled as integers; PowerLaw
// weights are real-valued, via inverse-transform sampling of the truncated
// density.
Graph assign_weights(const Graph& graph, const WeightDistribution& dist,
                     std::uint64_t seed);

// Analytic mean of the truncated power-law density c * x^-exponent on
// [min, max]. Exposed so callers can sanity-check empirical samples.
double power_law_mean(const WeightDistribution& dist);

}  // namespace decwvc

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "decwvc/engine.hpp"
#include "decwvc/generate.hpp"
#include "decwvc/graph.hpp"
#include "decwvc/protocol.hpp"

namespace decwvc {

// Cover weight as a fraction of total graph weight, in [0, 1]. Lower is
// better. Requires a nonempty graph.
double apw(const Graph& graph, const std::vector<VertexId>& cover);

// Name <-> enum mappings shared by config files, CSV columns and the CLI.
std::string topology_name(TopologyKind kind);
std::string weight_kind_name(WeightKind kind);
std::string rule_name(OptimizeRule rule);
TopologyKind parse_topology(const std::string& name);
WeightKind parse_weight_kind(const std::string& name);
OptimizeRule parse_rule(const std::string& name);

struct ExperimentConfig {
    std::vector<TopologyKind> topologies;
    std::vector<std::size_t> orders;       // powers of two in [2^6, 2^14]
    std::vector<unsigned> degrees;         // subset of {5, 10, 15}
    std::vector<WeightKind> distributions;
    unsigned repetitions = 10;
    std::uint64_t base_seed = 1;
    OptimizeRule rule = OptimizeRule::Safe;
};

// One experiment cell: a point of the config cross product.
struct CellKey {
    TopologyKind topology;
    std::size_t order;
    unsigned degree;
    WeightKind distribution;
};

struct AggregateRow {
    CellKey cell;
    unsigned repetitions = 0;
    double mean_apw = 0.0;
    double mean_rounds = 0.0;
    double mean_mpn = 0.0;
    double mean_cover_size = 0.0;
    double mean_elapsed_ms = 0.0;  // hardware-dependent; omitted from the CSV
    double validity_rate = 0.0;
    bool failed = false;
    std::string error;
};

// Throws std::invalid_argument if any field violates its constraints.
void validate_config(const ExperimentConfig& config);

// Cross product of the config lists, in listed order.
std::vector<CellKey> expand_cells(const ExperimentConfig& config);

// Seed for repetition `rep` of a cell. A pure function of the cell identity
// and the base seed, so adding or reordering cells never perturbs the
// results of existing ones.
std::uint64_t cell_seed(std::uint64_t base_seed, const CellKey& cell, unsigned rep);

// Runs one repetition of a cell: regenerates the graph and its weights from
// cell-derived seeds, then executes the protocol.
RunReport run_cell_once(const CellKey& cell, std::uint64_t base_seed, unsigned rep,
                        OptimizeRule rule);

// Runs every cell of the config, averaging `repetitions` seeded runs per
// cell. A generation failure marks that cell failed and the batch continues.
std::vector<AggregateRow> run_experiment(const ExperimentConfig& config);

// Key-value config file: "key = value" lines, '#' comments, comma-separated
// lists. Keys: topologies, orders, degrees, distributions, repetitions,
// seed, rule. The first four are required.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// CSV with a fixed header and stable shortest-round-trip number formatting;
// emitting the same rows twice yields identical bytes. The hardware-dependent
// elapsed-time mean is deliberately not a CSV column. Throws on empty rows.
std::string emit_csv(const std::vector<AggregateRow>& rows);

// JSON array of row objects (includes mean_elapsed_ms). Throws on empty rows.
std::string emit_json(const std::vector<AggregateRow>& rows);

void write_text_file(const std::string& content, const std::filesystem::path& path);

// Single-run report as JSON. `solver` tags the producing algorithm; `rule`
// is included only for protocol runs.
std::string run_report_to_json(const RunReport& report, const std::string& solver,
                               const std::string& rule = "");

}  // namespace decwvc

// Command-line frontend: graph generation, single solves, experiment
// batches, and cover validation.
//
// Exit codes: 0 success, 1 invalid input, 2 invalid cover detected.

#include <charconv>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decwvc/baselines.hpp"
#include "decwvc/engine.hpp"
#include "decwvc/experiments.hpp"
#include "decwvc/generate.hpp"
#include "decwvc/graph_io.hpp"
#include "decwvc/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitInvalidCover = 2;

std::vector<decwvc::VertexId> load_cover_file(const std::string& path,
                                              std::size_t order) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open cover file: " + path);
    }
    std::vector<decwvc::VertexId> cover;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        std::uint64_t id = 0;
        const char* first = line.data() + begin;
        const char* last = line.data() + end + 1;
        auto [ptr, ec] = std::from_chars(first, last, id);
        if (ec != std::errc{} || ptr != last) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected a vertex id per line");
        }
        if (id < 1 || id > order) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": vertex id out of range 1.." +
                                        std::to_string(order));
        }
        cover.push_back(static_cast<decwvc::VertexId>(id));
    }
    return cover;
}

int cmd_generate(const std::string& topology, std::size_t nodes, unsigned degree,
                 const std::string& weights, std::uint64_t seed,
                 const std::string& out) {
    const decwvc::Topology topo{decwvc::parse_topology(topology), nodes, degree};
    decwvc::Graph graph = decwvc::generate(topo, decwvc::derive_seed(seed, 1));
    graph = decwvc::assign_weights(
        graph, decwvc::WeightDistribution{decwvc::parse_weight_kind(weights)},
        decwvc::derive_seed(seed, 2));
    decwvc::save_graph(graph, out);
    std::cout << "wrote " << out << ": " << graph.order() << " vertices, "
              << graph.edge_count() << " edges, average degree "
              << graph.average_degree() << "\n";
    return kExitOk;
}

int cmd_solve(const std::string& graph_path, const std::string& rule,
              const std::string& baseline, const std::string& out) {
    const decwvc::Graph graph = decwvc::load_graph(graph_path);

    decwvc::RunReport report;
    std::string solver;
    std::string rule_tag;
    if (baseline.empty()) {
        report = decwvc::run(graph, decwvc::parse_rule(rule));
        solver = "decwvc";
        rule_tag = rule;
    } else {
        decwvc::SolverResult result;
        if (baseline == "exact") {
            result = decwvc::brute_force_mwvc(graph);
            solver = "exact";
        } else if (baseline == "greedy") {
            result = decwvc::greedy_mwvc(graph);
            result.cover = decwvc::redundancy_prune(graph, result.cover);
            result.cover_weight = 0.0;
            for (decwvc::VertexId v : result.cover) {
                result.cover_weight += graph.weight(v);
            }
            solver = "greedy";
        } else {
            throw std::invalid_argument("unknown baseline \"" + baseline +
                                        "\" (expected greedy|exact)");
        }
        report.cover = result.cover;
        report.cover_weight = result.cover_weight;
        report.apw_numerator = result.cover_weight;
        report.apw_denominator = graph.total_weight();
        report.apw = decwvc::apw(graph, result.cover);
        report.valid = decwvc::validate_cover(graph, result.cover);
    }

    decwvc::write_text_file(decwvc::run_report_to_json(report, solver, rule_tag),
                            out);
    std::cout << solver << ": cover size " << report.cover.size() << ", weight "
              << report.cover_weight << ", apw " << report.apw << ", valid "
              << (report.valid ? "yes" : "no") << "\n";
    return report.valid ? kExitOk : kExitInvalidCover;
}

int cmd_experiment(const std::string& config_path, const std::string& out_csv,
                   const std::string& out_json) {
    const decwvc::ExperimentConfig config =
        decwvc::load_experiment_config(config_path);
    const auto rows = decwvc::run_experiment(config);
    decwvc::write_text_file(decwvc::emit_csv(rows), out_csv);
    if (!out_json.empty()) {
        decwvc::write_text_file(decwvc::emit_json(rows), out_json);
    }
    std::size_t failed = 0;
    for (const auto& row : rows) failed += row.failed ? 1 : 0;
    std::cout << rows.size() << " cells, " << failed << " failed; wrote "
              << out_csv << (out_json.empty() ? "" : " and " + out_json) << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& graph_path, const std::string& cover_path) {
    const decwvc::Graph graph = decwvc::load_graph(graph_path);
    const auto cover = load_cover_file(cover_path, graph.order());
    if (decwvc::validate_cover(graph, cover)) {
        std::cout << "valid cover: " << cover.size() << " vertices\n";
        return kExitOk;
    }
    std::cout << "INVALID cover: some edge has no covered endpoint\n";
    return kExitInvalidCover;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decwvc: decentralized weighted-minimum-vertex-cover simulator"};
    app.require_subcommand(1);

    std::string topology = "random";
    std::size_t nodes = 0;
    unsigned degree = 0;
    std::string weights = "uniform";
    std::uint64_t seed = 1;
    std::string out;
    auto* gen = app.add_subcommand("generate", "Generate a synthetic weighted graph");
    gen->add_option("--topology", topology, "random|scalefree|smallworld")
        ->required();
    gen->add_option("--nodes", nodes, "Vertex count")->required();
    gen->add_option("--avg-degree", degree, "Target average degree")->required();
    gen->add_option("--weights", weights, "uniform|power")->required();
    gen->add_option("--seed", seed, "Generation seed")->required();
    gen->add_option("--out", out, "Output graph file")->required();

    std::string graph_path;
    std::string rule = "safe";
    std::string baseline;
    std::string solve_out;
    auto* solve = app.add_subcommand("solve", "Run a solver on a graph file");
    solve->add_option("--graph", graph_path, "Input graph file")->required();
    solve->add_option("--rule", rule,
                      "Drop-conflict rule: safe (default) or paper (permissive; "
                      "can break validity on conflict chains)");
    solve->add_option("--baseline", baseline,
                      "Run a centralized baseline instead: greedy|exact");
    solve->add_option("--out", solve_out, "Output report JSON")->required();

    std::string config_path;
    std::string out_csv;
    std::string out_json;
    auto* exp = app.add_subcommand("experiment", "Run an experiment batch");
    exp->add_option("--config", config_path, "Key-value config file")->required();
    exp->add_option("--out-csv", out_csv, "Output CSV")->required();
    exp->add_option("--out-json", out_json, "Optional output JSON");

    std::string cover_path;
    auto* val = app.add_subcommand("validate", "Check a cover file against a graph");
    val->add_option("--graph", graph_path, "Input graph file")->required();
    val->add_option("--cover", cover_path, "Cover file, one vertex id per line")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(topology, nodes, degree, weights, seed, out);
        }
        if (solve->parsed()) {
            return cmd_solve(graph_path, rule, baseline, solve_out);
        }
        if (exp->parsed()) {
            return cmd_experiment(config_path, out_csv, out_json);
        }
        if (val->parsed()) {
            return cmd_validate(graph_path, cover_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

#include "decwvc/experiments.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "decwvc/rng.hpp"

namespace decwvc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("config: bad " + what + ": \"" + s + "\"");
    }
    return v;
}

}  // namespace

double apw(const Graph& graph, const std::vector<VertexId>& cover) {
    if (graph.order() == 0) {
        throw std::invalid_argument("apw: graph must be nonempty");
    }
    double num = 0.0;
    for (VertexId v : cover) num += graph.weight(v);
    return num / graph.total_weight();
}

std::string topology_name(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::Random: return "random";
        case TopologyKind::ScaleFree: return "scalefree";
        case TopologyKind::SmallWorld: return "smallworld";
    }
    return "?";
}

std::string weight_kind_name(WeightKind kind) {
    return kind == WeightKind::Uniform ? "uniform" : "power";
}

std::string rule_name(OptimizeRule rule) {
    return rule == OptimizeRule::Safe ? "safe" : "paper";
}

TopologyKind parse_topology(const std::string& name) {
    if (name == "random") return TopologyKind::Random;
    if (name == "scalefree") return TopologyKind::ScaleFree;
    if (name == "smallworld") return TopologyKind::SmallWorld;
    throw std::invalid_argument("unknown topology \"" + name +
                                "\" (expected random|scalefree|smallworld)");
}

WeightKind parse_weight_kind(const std::string& name) {
    if (name == "uniform") return WeightKind::Uniform;
    if (name == "power") return WeightKind::PowerLaw;
    throw std::invalid_argument("unknown weight distribution \"" + name +
                                "\" (expected uniform|power)");
}

OptimizeRule parse_rule(const std::string& name) {
    if (name == "safe") return OptimizeRule::Safe;
    if (name == "paper") return OptimizeRule::Permissive;
    throw std::invalid_argument("unknown rule \"" + name +
                                "\" (expected paper|safe)");
}

void validate_config(const ExperimentConfig& config) {
    if (config.topologies.empty() || config.orders.empty() ||
        config.degrees.empty() || config.distributions.empty()) {
        throw std::invalid_argument(
            "config: topologies, orders, degrees and distributions must be nonempty");
    }
    for (std::size_t order : config.orders) {
        if (!is_power_of_two(order) || order < 64 || order > 16384) {
            throw std::invalid_argument(
                "config: orders must be powers of two in [64, 16384], got " +
                std::to_string(order));
        }
    }
    for (unsigned d : config.degrees) {
        if (d != 5 && d != 10 && d != 15) {
            throw std::invalid_argument(
                "config: degrees must be drawn from {5, 10, 15}, got " +
                std::to_string(d));
        }
    }
    if (config.repetitions < 1) {
        throw std::invalid_argument("config: repetitions must be >= 1");
    }
}

std::vector<CellKey> expand_cells(const ExperimentConfig& config) {
    std::vector<CellKey> cells;
    cells.reserve(config.topologies.size() * config.orders.size() *
                  config.degrees.size() * config.distributions.size());
    for (TopologyKind t : config.topologies) {
        for (std::size_t order : config.orders) {
            for (unsigned degree : config.degrees) {
                for (WeightKind dist : config.distributions) {
                    cells.push_back({t, order, degree, dist});
                }
            }
        }
    }
    return cells;
}

std::uint64_t cell_seed(std::uint64_t base_seed, const CellKey& cell, unsigned rep) {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ (static_cast<std::uint64_t>(cell.topology) + 1));
    h = splitmix64(h ^ cell.order);
    h = splitmix64(h ^ cell.degree);
    h = splitmix64(h ^ (static_cast<std::uint64_t>(cell.distribution) + 1));
    h = splitmix64(h ^ rep);
    return h;
}

RunReport run_cell_once(const CellKey& cell, std::uint64_t base_seed, unsigned rep,
                        OptimizeRule rule) {
    const std::uint64_t seed = cell_seed(base_seed, cell, rep);
    const Topology topology{cell.topology, cell.order, cell.degree};
    Graph graph = generate(topology, derive_seed(seed, 1));
    graph = assign_weights(graph, WeightDistribution{cell.distribution},
                           derive_seed(seed, 2));
    return run(graph, rule);
}

std::vector<AggregateRow> run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    std::vector<AggregateRow> rows;
    for (const CellKey& cell : expand_cells(config)) {
        AggregateRow row;
        row.cell = cell;
        row.repetitions = config.repetitions;
        try {
            double apw_sum = 0.0;
            double rounds_sum = 0.0;
            double mpn_sum = 0.0;
            double size_sum = 0.0;
            double elapsed_sum = 0.0;
            double valid_sum = 0.0;
            for (unsigned rep = 0; rep < config.repetitions; ++rep) {
                RunReport r = run_cell_once(cell, config.base_seed, rep, config.rule);
                apw_sum += r.apw;
                rounds_sum += static_cast<double>(r.rounds);
                mpn_sum += r.mpn;
                size_sum += static_cast<double>(r.cover.size());
                elapsed_sum += r.elapsed_ms;
                valid_sum += r.valid ? 1.0 : 0.0;
            }
            const auto r = static_cast<double>(config.repetitions);
            row.mean_apw = apw_sum / r;
            row.mean_rounds = rounds_sum / r;
            row.mean_mpn = mpn_sum / r;
            row.mean_cover_size = size_sum / r;
            row.mean_elapsed_ms = elapsed_sum / r;
            row.validity_rate = valid_sum / r;
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
            row.mean_apw = row.mean_rounds = row.mean_mpn = row.mean_cover_size =
                row.mean_elapsed_ms = row.validity_rate =
                    std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ExperimentConfig parse_experiment_config(std::istream& in) {
    ExperimentConfig config;
    bool have_topologies = false;
    bool have_orders = false;
    bool have_degrees = false;
    bool have_distributions = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected \"key = value\"");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "topologies") {
            for (const auto& item : split_list(value)) {
                config.topologies.push_back(parse_topology(item));
            }
            have_topologies = true;
        } else if (key == "orders") {
            for (const auto& item : split_list(value)) {
                config.orders.push_back(parse_u64(item, "order"));
            }
            have_orders = true;
        } else if (key == "degrees") {
            for (const auto& item : split_list(value)) {
                config.degrees.push_back(
                    static_cast<unsigned>(parse_u64(item, "degree")));
            }
            have_degrees = true;
        } else if (key == "distributions") {
            for (const auto& item : split_list(value)) {
                config.distributions.push_back(parse_weight_kind(item));
            }
            have_distributions = true;
        } else if (key == "repetitions") {
            config.repetitions = static_cast<unsigned>(parse_u64(value, "repetitions"));
        } else if (key == "seed") {
            config.base_seed = parse_u64(value, "seed");
        } else if (key == "rule") {
            config.rule = parse_rule(value);
        } else {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": unknown key \"" + key + "\"");
        }
    }

    if (!have_topologies || !have_orders || !have_degrees || !have_distributions) {
        throw std::invalid_argument(
            "config: topologies, orders, degrees and distributions are required");
    }
    validate_config(config);
    return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path.string());
    }
    return parse_experiment_config(in);
}

std::string emit_csv(const std::vector<AggregateRow>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("emit_csv: no rows");
    }
    std::string out =
        "topology,order,degree,distribution,repetitions,mean_apw,mean_rounds,"
        "mean_mpn,mean_cover_size,validity_rate,status\n";
    for (const auto& row : rows) {
        out += topology_name(row.cell.topology);
        out += ',';
        out += std::to_string(row.cell.order);
        out += ',';
        out += std::to_string(row.cell.degree);
        out += ',';
        out += weight_kind_name(row.cell.distribution);
        out += ',';
        out += std::to_string(row.repetitions);
        out += ',';
        out += fmt_double(row.mean_apw);
        out += ',';
        out += fmt_double(row.mean_rounds);
        out += ',';
        out += fmt_double(row.mean_mpn);
        out += ',';
        out += fmt_double(row.mean_cover_size);
        out += ',';
        out += fmt_double(row.validity_rate);
        out += ',';
        out += row.failed ? "failed" : "ok";
        out += '\n';
    }
    return out;
}

std::string emit_json(const std::vector<AggregateRow>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("emit_json: no rows");
    }
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json obj;
        obj["topology"] = topology_name(row.cell.topology);
        obj["order"] = row.cell.order;
        obj["degree"] = row.cell.degree;
        obj["distribution"] = weight_kind_name(row.cell.distribution);
        obj["repetitions"] = row.repetitions;
        if (row.failed) {
            obj["status"] = "failed";
            obj["error"] = row.error;
        } else {
            obj["status"] = "ok";
            obj["mean_apw"] = row.mean_apw;
            obj["mean_rounds"] = row.mean_rounds;
            obj["mean_mpn"] = row.mean_mpn;
            obj["mean_cover_size"] = row.mean_cover_size;
            obj["mean_elapsed_ms"] = row.mean_elapsed_ms;
            obj["validity_rate"] = row.validity_rate;
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

void write_text_file(const std::string& content, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::string run_report_to_json(const RunReport& report, const std::string& solver,
                               const std::string& rule) {
    ordered_json obj;
    obj["solver"] = solver;
    if (!rule.empty()) obj["rule"] = rule;
    obj["cover"] = report.cover;
    obj["cover_size"] = report.cover.size();
    obj["cover_weight"] = report.cover_weight;
    obj["apw"] = report.apw;
    obj["selection_rounds"] = report.selection_rounds;
    obj["rounds"] = report.rounds;
    obj["total_messages"] = report.total_messages;
    obj["mpn"] = report.mpn;
    obj["messages"] = {{"score_exchange", report.tally.score_exchange},
                       {"include", report.tally.include},
                       {"cover_announce", report.tally.cover_announce},
                       {"settled", report.tally.settled},
                       {"communicate_drop", report.tally.communicate_drop},
                       {"drop_reply", report.tally.drop_reply},
                       {"revoke_drop", report.tally.revoke_drop}};
    obj["elapsed_ms"] = report.elapsed_ms;
    obj["valid"] = report.valid;
    return obj.dump(2) + "\n";
}

}  // namespace decwvc

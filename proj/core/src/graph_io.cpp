#include "decwvc/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

namespace decwvc {

namespace {

using Kind = GraphIoError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& origin, std::size_t line_no,
                       const std::string& what) {
    throw GraphIoError(kind, origin + ":" + std::to_string(line_no) + ": " + what);
}

// Reads one line, tolerating a missing trailing newline on the last line.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    return true;
}

const char* skip_ws(const char* p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    return p;
}

template <typename T>
const char* parse_number(const char* p, const char* end, T& out) {
    auto [ptr, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{}) return nullptr;
    return ptr;
}

// Formats a double so that reading it back recovers the exact value; integral
// weights print without a fractional part.
void write_weight(std::ostream& out, double w) {
    if (w == std::floor(w) && std::abs(w) < 1e15) {
        out << static_cast<long long>(w);
        return;
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    out.write(buf, ptr - buf);
}

}  // namespace

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphIoError(Kind::IoFailure,
                           "cannot open graph file: " + path.string());
    }
    return load_graph(in, path.string());
}

Graph load_graph(std::istream& in, const std::string& origin) {
    std::string line;
    std::size_t line_no = 0;

    if (!next_line(in, line, line_no)) {
        fail(Kind::MalformedHeader, origin, 1, "missing header line");
    }
    std::size_t n = 0;
    std::size_t m = 0;
    {
        const char* p = line.data();
        const char* end = p + line.size();
        p = skip_ws(p, end);
        p = parse_number(p, end, n);
        if (!p) fail(Kind::MalformedHeader, origin, line_no, "expected \"<n> <m>\"");
        p = skip_ws(p, end);
        p = parse_number(p, end, m);
        if (!p) fail(Kind::MalformedHeader, origin, line_no, "expected \"<n> <m>\"");
        if (skip_ws(p, end) != end) {
            fail(Kind::MalformedHeader, origin, line_no, "trailing content after header");
        }
        if (n < 1) fail(Kind::MalformedHeader, origin, line_no, "vertex count must be >= 1");
    }

    std::vector<double> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line(in, line, line_no)) {
            fail(Kind::MalformedLine, origin, line_no + 1,
                 "missing weight for vertex " + std::to_string(i + 1));
        }
        const char* p = line.data();
        const char* end = p + line.size();
        p = skip_ws(p, end);
        double w = 0.0;
        p = parse_number(p, end, w);
        if (!p || skip_ws(p, end) != end) {
            fail(Kind::MalformedLine, origin, line_no, "expected a single weight");
        }
        if (!(w > 0.0) || !std::isfinite(w)) {
            fail(Kind::NonPositiveWeight, origin, line_no,
                 "weight of vertex " + std::to_string(i + 1) + " must be positive");
        }
        weights[i] = w;
    }

    EdgeList edges;
    edges.reserve(m);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line(in, line, line_no)) {
            fail(Kind::MalformedLine, origin, line_no + 1,
                 "missing edge " + std::to_string(i + 1) + " of " + std::to_string(m));
        }
        const char* p = line.data();
        const char* end = p + line.size();
        p = skip_ws(p, end);
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        p = parse_number(p, end, u);
        if (p) {
            p = skip_ws(p, end);
            p = parse_number(p, end, v);
        }
        if (!p || skip_ws(p, end) != end) {
            fail(Kind::MalformedLine, origin, line_no, "expected \"<u> <v>\"");
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            fail(Kind::VertexOutOfRange, origin, line_no,
                 "edge endpoint outside 1.." + std::to_string(n));
        }
        if (u >= v) {
            fail(Kind::MalformedLine, origin, line_no, "edges must satisfy u < v");
        }
        auto e = std::make_pair(static_cast<VertexId>(u), static_cast<VertexId>(v));
        if (!seen.insert(e).second) {
            fail(Kind::DuplicateEdge, origin, line_no,
                 "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        edges.push_back(e);
    }

    while (next_line(in, line, line_no)) {
        if (skip_ws(line.data(), line.data() + line.size()) !=
            line.data() + line.size()) {
            fail(Kind::MalformedLine, origin, line_no, "unexpected content after edges");
        }
    }

    return Graph(n, edges, std::move(weights));
}

void save_graph(const Graph& graph, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GraphIoError(Kind::IoFailure,
                           "cannot open file for writing: " + path.string());
    }
    save_graph(graph, out);
    if (!out) {
        throw GraphIoError(Kind::IoFailure, "write failed: " + path.string());
    }
}

void save_graph(const Graph& graph, std::ostream& out) {
    out << graph.order() << ' ' << graph.edge_count() << '\n';
    for (VertexId v = 1; v <= graph.order(); ++v) {
        write_weight(out, graph.weight(v));
        out << '\n';
    }
    for (auto [u, v] : graph.edges()) {
        out << u << ' ' << v << '\n';
    }
}

}  // namespace decwvc

#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "decwvc/graph.hpp"

namespace decwvc {

// Parse/validation failure while reading a graph file. `kind()` identifies
// the rejected construct.
class GraphIoError : public std::runtime_error {
public:
    enum class Kind {
        IoFailure,          // file could not be opened / stream error
        MalformedHeader,    // first line is not "<n> <m>" with n >= 1, m >= 0
        MalformedLine,      // unparseable weight/edge line, u >= v, trailing junk
        VertexOutOfRange,   // edge endpoint outside 1..n
        DuplicateEdge,
        NonPositiveWeight,
    };

    GraphIoError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Text format (UTF-8, LF):
//   line 1:            "<n> <m>"
//   lines 2 .. n+1:    weight of vertex i on line i+1
//   lines n+2 .. n+m+1: "<u> <v>" with 1 <= u < v <= n, no duplicates
Graph load_graph(const std::filesystem::path& path);
Graph load_graph(std::istream& in, const std::string& origin = "<stream>");

void save_graph(const Graph& graph, const std::filesystem::path& path);
void save_graph(const Graph& graph, std::ostream& out);

}  // namespace decwvc

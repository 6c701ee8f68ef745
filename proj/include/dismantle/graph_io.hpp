#pragma once

#include <dismantle/graph.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dismantle {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class GraphFormat { edge_list, dot };

// Native edge list: "n m", then m lines "u v" with u < v. Lines starting
// with '#' are comments, except "# label v name" which names vertex v.
Graph read_graph(std::string_view text);
Graph read_graph_file(const std::string & path);
std::string write_graph(const Graph & g, GraphFormat format = GraphFormat::edge_list);

} // namespace dismantle

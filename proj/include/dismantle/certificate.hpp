#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dismantle {

class Graph;

struct Move {
    enum class Kind { remove, add, remove_edge };

    Kind kind = Kind::remove;
    int v = -1;
    int u = -1;      // other endpoint, remove_edge only
    int k = 0;       // claimed level; unused for remove_edge
    std::vector<int> nbrs;  // add only, sorted
    std::string label;      // optional name for an added vertex

    static Move deletion(int v, int k);
    static Move addition(int v, int k, std::vector<int> nbrs, std::string label = {});
    static Move edge_deletion(int u, int v);

    friend bool operator==(const Move &, const Move &) = default;
};

struct Certificate {
    std::string graph_hash;  // of the starting graph, empty to skip the check
    std::vector<Move> moves;
    std::optional<std::vector<int>> final_vertices;  // nullopt: a single point

    friend bool operator==(const Certificate &, const Certificate &) = default;
};

class CertificateError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string certificate_to_json(const Certificate & c, int indent = 2);
Certificate parse_certificate(std::string_view json_text);
Certificate read_certificate_file(const std::string & path);

// Human-readable one-liner, with vertex names taken from g where known.
std::string describe(const Move & m, const Graph & g);

} // namespace dismantle

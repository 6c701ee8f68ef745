#include <dismantle/graph_io.hpp>

#include <fstream>
#include <sstream>
#include <vector>

namespace dismantle {

namespace {

std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// parses exactly `count` integers, nothing else
std::vector<long long> ints(std::string_view s, int count, int line) {
    std::istringstream in{std::string(s)};
    std::vector<long long> out;
    long long x;
    while (in >> x)
        out.push_back(x);
    in.clear();
    std::string rest;
    if (in >> rest || static_cast<int>(out.size()) != count)
        throw ParseError(line, "expected " + std::to_string(count) + " integers, got '" + std::string(s) + "'");
    return out;
}

} // namespace

Graph read_graph(std::string_view text) {
    int lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0, seen_edges = 0;
    std::vector<int> edge_lines;
    std::vector<Edge> edges;
    std::vector<std::pair<int, std::string>> labels;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        auto line = trim(raw);
        if (line.empty())
            continue;
        if (line[0] == '#') {
            auto body = trim(line.substr(1));
            if (body.substr(0, 6) == "label " || body == "label") {
                std::istringstream in{std::string(body.substr(5))};
                long long v;
                std::string name;
                if (!(in >> v))
                    throw ParseError(lineno, "label line needs a vertex index");
                std::getline(in, name);
                auto nm = std::string(trim(name));
                if (nm.empty())
                    throw ParseError(lineno, "label line needs a name");
                if (!have_header || v < 0 || v >= n)
                    throw ParseError(lineno, "label for vertex " + std::to_string(v) + " out of range");
                labels.emplace_back(static_cast<int>(v), nm);
            }
            continue;
        }
        if (!have_header) {
            auto h = ints(line, 2, lineno);
            n = h[0];
            m = h[1];
            if (n < 0 || n > kMaxVertices)
                throw ParseError(lineno, "vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
            if (m < 0 || m > n * (n - 1) / 2)
                throw ParseError(lineno, "edge count " + std::to_string(m) + " impossible for " + std::to_string(n) + " vertices");
            have_header = true;
            continue;
        }
        if (seen_edges == m)
            throw ParseError(lineno, "more edge lines than the declared " + std::to_string(m));
        auto e = ints(line, 2, lineno);
        auto u = e[0], v = e[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex out of range in edge " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw ParseError(lineno, "loop at vertex " + std::to_string(u));
        if (u > v)
            throw ParseError(lineno, "edge endpoints must satisfy u < v");
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == Edge(static_cast<int>(u), static_cast<int>(v)))
                throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v) +
                                             " (first on line " + std::to_string(edge_lines[i]) + ")");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        edge_lines.push_back(lineno);
        ++seen_edges;
    }
    if (!have_header)
        throw ParseError(lineno, "missing 'n m' header");
    if (seen_edges != m)
        throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " + std::to_string(seen_edges));

    GraphBuilder b(static_cast<int>(n));
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    if (!labels.empty()) {
        std::vector<bool> named(n, false);
        for (auto & [v, name] : labels) {
            if (named[v])
                throw ParseError(lineno, "vertex " + std::to_string(v) + " labelled twice");
            named[v] = true;
            b.set_label(v, name);
        }
        for (int v = 0; v < n; ++v)
            if (!named[v])
                throw ParseError(lineno, "labels must cover every vertex; vertex " + std::to_string(v) + " has none");
    }
    try {
        return b.build();
    } catch (const std::invalid_argument & e) {
        throw ParseError(lineno, e.what());
    }
}

Graph read_graph_file(const std::string & path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return read_graph(ss.str());
    } catch (const ParseError & e) {
        throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

std::string write_graph(const Graph & g, GraphFormat format) {
    std::ostringstream out;
    auto es = g.edges();
    if (format == GraphFormat::edge_list) {
        out << g.order() << ' ' << es.size() << '\n';
        for (auto [u, v] : es)
            out << u << ' ' << v << '\n';
        if (g.has_labels())
            for (int v = 0; v < g.order(); ++v)
                out << "# label " << v << ' ' << g.labels()[v] << '\n';
        return out.str();
    }
    auto quote = [](const std::string & s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                q.push_back('\\');
            q.push_back(c);
        }
        return q + "\"";
    };
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (g.has_labels())
            out << " [label=" << quote(g.labels()[v]) << "]";
        out << ";\n";
    }
    for (auto [u, v] : es)
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace dismantle

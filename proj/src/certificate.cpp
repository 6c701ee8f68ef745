#include <dismantle/certificate.hpp>
#include <dismantle/graph.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dismantle {

using nlohmann::json;

Move Move::deletion(int v, int k) {
    Move m;
    m.kind = Kind::remove;
    m.v = v;
    m.k = k;
    return m;
}

Move Move::addition(int v, int k, std::vector<int> nbrs, std::string label) {
    Move m;
    m.kind = Kind::add;
    m.v = v;
    m.k = k;
    std::sort(nbrs.begin(), nbrs.end());
    m.nbrs = std::move(nbrs);
    m.label = std::move(label);
    return m;
}

Move Move::edge_deletion(int u, int v) {
    Move m;
    m.kind = Kind::remove_edge;
    m.u = std::min(u, v);
    m.v = std::max(u, v);
    return m;
}

namespace {

json move_json(const Move & m) {
    json j;
    switch (m.kind) {
    case Move::Kind::remove:
        j["op"] = "delete";
        j["v"] = m.v;
        j["k"] = m.k;
        break;
    case Move::Kind::add:
        j["op"] = "add";
        j["v"] = m.v;
        j["k"] = m.k;
        j["nbrs"] = m.nbrs;
        if (!m.label.empty())
            j["label"] = m.label;
        break;
    case Move::Kind::remove_edge:
        j["op"] = "delete_edge";
        j["u"] = m.u;
        j["v"] = m.v;
        break;
    }
    return j;
}

int get_int(const json & j, const char * key, std::size_t index) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw CertificateError("move " + std::to_string(index) + ": missing integer field '" + key + "'");
    return j[key].get<int>();
}

} // namespace

std::string certificate_to_json(const Certificate & c, int indent) {
    json j;
    j["version"] = "cert_v1";
    j["graph_hash"] = c.graph_hash;
    j["moves"] = json::array();
    for (auto & m : c.moves)
        j["moves"].push_back(move_json(m));
    if (c.final_vertices)
        j["final"] = json{{"vertices", *c.final_vertices}};
    else
        j["final"] = "point";
    return j.dump(indent);
}

Certificate parse_certificate(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error & e) {
        throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw CertificateError("certificate must be a JSON object");
    if (j.contains("version") && j["version"] != "cert_v1")
        throw CertificateError("unsupported certificate version " + j["version"].dump());
    Certificate c;
    if (j.contains("graph_hash")) {
        if (!j["graph_hash"].is_string())
            throw CertificateError("graph_hash must be a string");
        c.graph_hash = j["graph_hash"].get<std::string>();
    }
    if (!j.contains("moves") || !j["moves"].is_array())
        throw CertificateError("certificate needs a 'moves' array");
    std::size_t i = 0;
    for (auto & jm : j["moves"]) {
        if (!jm.is_object() || !jm.contains("op") || !jm["op"].is_string())
            throw CertificateError("move " + std::to_string(i) + ": missing 'op'");
        auto op = jm["op"].get<std::string>();
        if (op == "delete") {
            c.moves.push_back(Move::deletion(get_int(jm, "v", i), get_int(jm, "k", i)));
        } else if (op == "add") {
            if (!jm.contains("nbrs") || !jm["nbrs"].is_array())
                throw CertificateError("move " + std::to_string(i) + ": add needs a 'nbrs' array");
            std::vector<int> nbrs;
            for (auto & x : jm["nbrs"]) {
                if (!x.is_number_integer())
                    throw CertificateError("move " + std::to_string(i) + ": non-integer neighbour");
                nbrs.push_back(x.get<int>());
            }
            std::string label;
            if (jm.contains("label") && jm["label"].is_string())
                label = jm["label"].get<std::string>();
            c.moves.push_back(Move::addition(get_int(jm, "v", i), get_int(jm, "k", i), std::move(nbrs), label));
        } else if (op == "delete_edge") {
            c.moves.push_back(Move::edge_deletion(get_int(jm, "u", i), get_int(jm, "v", i)));
        } else {
            throw CertificateError("move " + std::to_string(i) + ": unknown op '" + op + "'");
        }
        ++i;
    }
    if (!j.contains("final"))
        throw CertificateError("certificate needs a 'final' descriptor");
    if (j["final"] == "point") {
        c.final_vertices.reset();
    } else if (j["final"].is_object() && j["final"].contains("vertices") && j["final"]["vertices"].is_array()) {
        std::vector<int> vs;
        for (auto & x : j["final"]["vertices"]) {
            if (!x.is_number_integer())
                throw CertificateError("final: non-integer vertex");
            vs.push_back(x.get<int>());
        }
        std::sort(vs.begin(), vs.end());
        c.final_vertices = std::move(vs);
    } else {
        throw CertificateError("final must be \"point\" or {\"vertices\": [...]}");
    }
    return c;
}

Certificate read_certificate_file(const std::string & path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_certificate(ss.str());
}

std::string describe(const Move & m, const Graph & g) {
    auto name = [&](int v) { return v >= 0 && v < g.order() ? g.name(v) : "#" + std::to_string(v); };
    switch (m.kind) {
    case Move::Kind::remove:
        return "delete " + name(m.v) + " at level " + std::to_string(m.k);
    case Move::Kind::add: {
        std::string s = "add " + (m.label.empty() ? "#" + std::to_string(m.v) : m.label) + " at level " +
                        std::to_string(m.k) + " adjacent to {";
        for (std::size_t i = 0; i < m.nbrs.size(); ++i)
            s += (i ? ", " : "") + name(m.nbrs[i]);
        return s + "}";
    }
    case Move::Kind::remove_edge:
        return "delete edge {" + name(m.u) + ", " + name(m.v) + "}";
    }
    return {};
}

} // namespace dismantle

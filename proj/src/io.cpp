#include "zec/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zec {

namespace {

using nlohmann::json;

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidInput(std::string("malformed document: ") + e.what());
    }
}

long require_int(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidInput(std::string("missing integer field '") + key + "'");
    return j[key].get<long>();
}

const json &require_array(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InvalidInput(std::string("missing array field '") + key + "'");
    return j[key];
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

}  // namespace

FileKind sniff_kind(const std::string &text) {
    const json j = parse_json(text);
    if (j.contains("rows")) return FileKind::Channel;
    if (j.contains("edges") || j.contains("vertex_count")) return FileKind::Graph;
    if (j.contains("states")) return FileKind::Avc;
    throw InvalidInput("document is neither a channel, a graph, nor an AVC");
}

Channel parse_channel(const std::string &text) {
    const json j = parse_json(text);
    const long in = require_int(j, "input_size");
    const long out = require_int(j, "output_size");
    const json &rows = require_array(j, "rows");
    if (static_cast<long>(rows.size()) != in)
        throw InvalidInput("row count does not match input_size");
    std::vector<std::vector<Rational>> m;
    for (const auto &row : rows) {
        if (!row.is_array() || static_cast<long>(row.size()) != out)
            throw InvalidInput("row length does not match output_size");
        std::vector<Rational> r;
        for (const auto &e : row) {
            if (!e.is_string()) throw InvalidInput("channel entries must be \"p/q\" strings");
            r.push_back(Rational::parse(e.get<std::string>()));
        }
        m.push_back(std::move(r));
    }
    return Channel::validate(std::move(m));
}

Graph parse_graph(const std::string &text) {
    const json j = parse_json(text);
    const long n = require_int(j, "vertex_count");
    const json &edges = require_array(j, "edges");
    std::vector<std::pair<int, int>> e;
    for (const auto &pair : edges) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw InvalidInput("edges must be [u, v] index pairs");
        e.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return Graph(static_cast<int>(n), std::move(e));
}

ZeroOneAVC parse_avc(const std::string &text) {
    const json j = parse_json(text);
    const long in = require_int(j, "input_size");
    const long out = require_int(j, "output_size");
    const json &states = require_array(j, "states");
    std::vector<std::vector<int>> maps;
    for (const auto &img : states) {
        if (!img.is_array()) throw InvalidInput("states must be image vectors");
        std::vector<int> v;
        for (const auto &e : img) {
            if (!e.is_number_integer()) throw InvalidInput("state images must be integers");
            v.push_back(e.get<int>());
        }
        maps.push_back(std::move(v));
    }
    return ZeroOneAVC::validate(static_cast<int>(in), static_cast<int>(out), std::move(maps));
}

std::string serialize_channel(const Channel &w) {
    json rows = json::array();
    for (int x = 0; x < w.input_size(); ++x) {
        json row = json::array();
        for (int y = 0; y < w.output_size(); ++y) row.push_back(w.entry(x, y).str());
        rows.push_back(std::move(row));
    }
    return dump({{"input_size", w.input_size()},
                 {"output_size", w.output_size()},
                 {"rows", std::move(rows)}});
}

std::string serialize_graph(const Graph &g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return dump({{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}});
}

std::string serialize_avc(const ZeroOneAVC &avc) {
    json states = json::array();
    for (const auto &img : avc.states()) states.push_back(img);
    return dump({{"input_size", avc.input_size()},
                 {"output_size", avc.output_size()},
                 {"states", std::move(states)}});
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << content;
}

}  // namespace zec

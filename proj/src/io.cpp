#include "gdm/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gdm/errors.hpp"

namespace gdm {

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank line
        if (tok[0] == '#') continue;
        if (first && tok == "n") {
            if (!(ls >> n) || n < 0) throw ArgumentError("edge list: bad header");
            first = false;
            continue;
        }
        first = false;
        int u, v;
        try {
            u = std::stoi(tok);
        } catch (...) {
            throw ArgumentError("edge list: bad vertex token '" + tok + "'");
        }
        if (!(ls >> v)) throw ArgumentError("edge list: missing second endpoint");
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (n < 0) n = max_vertex + 1;
    return Graph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write graph file: " + path);
    write_edge_list(out, g);
}

namespace {

nlohmann::json parse_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("labeling file: invalid JSON: ") + e.what());
    }
    return j;
}

} // namespace

AnyLabeling read_labeling(std::istream& in) {
    nlohmann::json j = parse_json(in);
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
        throw ArgumentError("labeling file: expected an object with a 'values' array");
    if (j.contains("groupSpec")) {
        GroupLabeling l{AbelianGroup::parse(j["groupSpec"].get<std::string>()), {}};
        for (const auto& row : j["values"]) {
            if (!row.is_array()) throw ArgumentError("labeling file: group values must be residue arrays");
            GroupElement e;
            for (const auto& r : row) e.residues.push_back(r.get<std::int64_t>());
            if (!element_valid(l.group, e))
                throw ArgumentError("labeling file: residue vector not in " + l.group.spec());
            l.values.push_back(std::move(e));
        }
        return l;
    }
    ClassicLabeling l;
    for (const auto& v : j["values"]) l.values.push_back(v.get<std::int64_t>());
    return l;
}

void write_labeling(std::ostream& out, const GroupLabeling& l) {
    nlohmann::ordered_json j;
    j["groupSpec"] = l.group.spec();
    auto& values = j["values"] = nlohmann::json::array();
    for (const auto& e : l.values) values.push_back(e.residues);
    out << j.dump(2) << '\n';
}

void write_labeling(std::ostream& out, const ClassicLabeling& l) {
    nlohmann::ordered_json j;
    j["values"] = l.values;
    out << j.dump(2) << '\n';
}

AnyLabeling read_labeling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open labeling file: " + path);
    return read_labeling(in);
}

void write_labeling_file(const std::string& path, const GroupLabeling& l) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write labeling file: " + path);
    write_labeling(out, l);
}

void write_labeling_file(const std::string& path, const ClassicLabeling& l) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write labeling file: " + path);
    write_labeling(out, l);
}

} // namespace gdm

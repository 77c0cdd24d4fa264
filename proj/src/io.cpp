#include "ik/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "ik/catalog.hpp"

namespace ik {

using nlohmann::json;

namespace {

json graph_json(const MultiGraph& g) {
    if (g.is_simple()) return json{{"graph6", graph6_encode(g)}};
    json edges = json::array();
    for (const auto& e : g.edge_list()) edges.push_back({e.u, e.v, e.mult});
    return json{{"order", g.order()}, {"edges", edges}};
}

MultiGraph graph_from(const json& j) {
    if (j.contains("graph6")) return graph6_decode(j.at("graph6").get<std::string>());
    std::vector<EdgeSpec> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    return MultiGraph::build(j.at("order").get<int>(), edges);
}

}  // namespace

std::string graph_to_json(const MultiGraph& g) { return graph_json(g).dump(); }

MultiGraph graph_from_json(const std::string& line) {
    return graph_from(json::parse(line));
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw GraphError("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

void store_closure(const std::filesystem::path& path, const FamilyClosure& closure) {
    std::string out;
    json head{{"schema", 1}, {"kind", "closure"}, {"seed", closure.seed.hex()},
              {"members", closure.members.size()}};
    out += head.dump() + "\n";
    for (const auto& [canon, graph] : closure.members) {
        json line = graph_json(graph);
        line["canonical"] = canon.hex();
        out += line.dump() + "\n";
    }
    write_text_atomic(path, out);
}

FamilyClosure load_closure(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("missing closure file " + path.string());
    FamilyClosure closure;
    std::string line;
    bool have_head = false;
    std::string seed_hex;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw GraphError("closure file " + path.string() + ": bad line: " + e.what());
        }
        if (!have_head) {
            if (j.value("kind", "") != "closure" || j.value("schema", 0) != 1)
                throw GraphError("closure file " + path.string() + ": bad header");
            seed_hex = j.value("seed", "");
            have_head = true;
            continue;
        }
        MultiGraph g = graph_from(j);
        CanonicalForm canon = canonical_form(g);
        if (canon.hex() != j.value("canonical", ""))
            throw GraphError("closure file " + path.string() +
                             ": canonical form mismatch, line tampered or stale");
        if (canon.hex() == seed_hex) closure.seed = canon;
        closure.members.emplace(std::move(canon), std::move(g));
    }
    return closure;
}

}  // namespace ik

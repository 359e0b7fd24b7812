#include "loopdec/json_io.hpp"

#include <fstream>
#include <string>

namespace loopdec {

namespace {

[[noreturn]] void bad(const std::string& what) { fail("MalformedInput", what); }

long long want_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        bad(std::string("missing or non-integer \"") + key + "\"");
    return j[key].get<long long>();
}

} // namespace

json graph_to_json(const LoopedGraph& g) {
    json j;
    j["n"] = g.n;
    j["c"] = g.c;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    json loops = json::object();
    for (int u = 0; u < g.n; u++)
        for (int i = 0; i < g.c; i++)
            if (g.loops[u][i] != 0)
                loops[std::to_string(u)][std::to_string(i)] = g.loops[u][i];
    j["loops"] = std::move(loops);
    return j;
}

LoopedGraph graph_from_json(const json& j) {
    if (!j.is_object()) bad("graph must be a JSON object");
    int n = static_cast<int>(want_int(j, "n"));
    int c = static_cast<int>(want_int(j, "c"));
    std::vector<std::pair<int, int>> edges;
    if (!j.contains("edges") || !j["edges"].is_array()) bad("missing \"edges\" array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            bad("each edge must be a pair of vertices");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::vector<int>> loops(n, std::vector<int>(c, 0));
    if (j.contains("loops")) {
        if (!j["loops"].is_object()) bad("\"loops\" must be an object");
        for (const auto& [vk, row] : j["loops"].items()) {
            size_t pos = 0;
            int u = -1;
            try {
                u = std::stoi(vk, &pos);
            } catch (...) {
            }
            if (pos != vk.size() || u < 0 || u >= n) bad("bad loop vertex key " + vk);
            if (!row.is_object()) bad("loop row must map colors to counts");
            for (const auto& [ck, cnt] : row.items()) {
                pos = 0;
                int i = -1;
                try {
                    i = std::stoi(ck, &pos);
                } catch (...) {
                }
                if (pos != ck.size() || i < 0 || i >= c) bad("bad loop color key " + ck);
                if (!cnt.is_number_integer() || cnt.get<long long>() < 0)
                    bad("loop count must be a nonnegative integer");
                loops[u][i] = cnt.get<int>();
            }
        }
    }
    return LoopedGraph::create(n, c, std::move(edges), std::move(loops));
}

json decomposition_to_json(const Decomposition& d) {
    json j;
    j["graph"] = graph_to_json(d.graph);
    j["host"] = {{"v", d.host.v}, {"lambda", d.host.lambda}, {"mu", d.host.mu}};
    j["blocks"] = json::array();
    for (const auto& b : d.blocks)
        j["blocks"].push_back({{"map", b.map}, {"sign", b.sign}});
    return j;
}

Decomposition decomposition_from_json(const json& j) {
    if (!j.is_object()) bad("decomposition must be a JSON object");
    if (!j.contains("graph")) bad("missing \"graph\"");
    Decomposition d;
    d.graph = graph_from_json(j["graph"]);
    if (!j.contains("host") || !j["host"].is_object()) bad("missing \"host\"");
    d.host.v = static_cast<int>(want_int(j["host"], "v"));
    d.host.lambda = want_int(j["host"], "lambda");
    if (!j["host"].contains("mu") || !j["host"]["mu"].is_array())
        bad("host needs a \"mu\" array");
    for (const auto& x : j["host"]["mu"]) {
        if (!x.is_number_integer()) bad("mu entries must be integers");
        d.host.mu.push_back(x.get<long long>());
    }
    if (!j.contains("blocks") || !j["blocks"].is_array()) bad("missing \"blocks\"");
    for (const auto& bj : j["blocks"]) {
        if (!bj.is_object() || !bj.contains("map") || !bj["map"].is_array())
            bad("each block needs a \"map\" array");
        SignedBlock b;
        for (const auto& x : bj["map"]) {
            if (!x.is_number_integer()) bad("map entries must be integers");
            b.map.push_back(x.get<int>());
        }
        b.sign = bj.contains("sign") ? want_int(bj, "sign") : 1;
        if (b.sign == 0) bad("block coefficients must be nonzero");
        d.blocks.push_back(std::move(b));
    }
    return d;
}

json pbd_to_json(const Pbd& p) {
    json j;
    j["v"] = p.v;
    j["blocks"] = p.blocks;
    return j;
}

Pbd pbd_from_json(const json& j) {
    if (!j.is_object()) bad("PBD must be a JSON object");
    Pbd p;
    p.v = static_cast<int>(want_int(j, "v"));
    if (!j.contains("blocks") || !j["blocks"].is_array()) bad("missing \"blocks\"");
    for (const auto& bj : j["blocks"]) {
        if (!bj.is_array()) bad("each PBD block must be an array of points");
        std::vector<int> blk;
        for (const auto& x : bj) {
            if (!x.is_number_integer()) bad("points must be integers");
            blk.push_back(x.get<int>());
        }
        p.blocks.push_back(std::move(blk));
    }
    return p;
}

json coloring_to_json(int s, const std::vector<int>& colors) {
    return json{{"s", s}, {"colors", colors}};
}

void coloring_from_json(const json& j, int& s, std::vector<int>& colors) {
    if (!j.is_object()) bad("coloring must be a JSON object");
    s = static_cast<int>(want_int(j, "s"));
    if (!j.contains("colors") || !j["colors"].is_array()) bad("missing \"colors\"");
    colors.clear();
    for (const auto& x : j["colors"]) {
        if (!x.is_number_integer()) bad("colors must be integers");
        colors.push_back(x.get<int>());
    }
}

json order_to_json(const std::vector<int>& order) { return json{{"order", order}}; }

std::vector<int> order_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j["order"].is_array())
        bad("ordering files hold an \"order\" array");
    std::vector<int> order;
    for (const auto& x : j["order"]) {
        if (!x.is_number_integer()) bad("order entries must be integers");
        order.push_back(x.get<int>());
    }
    return order;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("MalformedInput", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        fail("MalformedInput", path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail("MalformedInput", "cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace loopdec

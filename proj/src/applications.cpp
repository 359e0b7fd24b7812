#include "loopdec/applications.hpp"

#include <algorithm>
#include <string>

#include "loopdec/verifier.hpp"

namespace loopdec {

namespace {

void require_loopless(const LoopedGraph& h, const char* what) {
    if (h.c != 0 && !h.loopless())
        fail("InvalidParameter", std::string(what) + " takes a loopless graph");
}

} // namespace

LoopedGraph attach_degree_loops(const LoopedGraph& h) {
    require_loopless(h, "attach_degree_loops");
    auto classes = degree_classes(h); // ascending degree
    std::vector<std::vector<int>> loops(h.n,
                                        std::vector<int>(classes.size(), 0));
    for (size_t i = 0; i < classes.size(); i++)
        for (int u : classes[i]) loops[u][i] = 1;
    return LoopedGraph::create(h.n, static_cast<int>(classes.size()), h.edges,
                               std::move(loops));
}

LoopedGraph attach_orbit_loops(const LoopedGraph& h, int vertex_bound) {
    require_loopless(h, "attach_orbit_loops");
    LoopedGraph bare = LoopedGraph::create(h.n, 0, h.edges);
    auto orbits = automorphism_orbits(bare, false, vertex_bound);
    std::vector<std::vector<int>> loops(h.n, std::vector<int>(orbits.size(), 0));
    for (size_t i = 0; i < orbits.size(); i++)
        for (int u : orbits[i]) loops[u][i] = 1;
    return LoopedGraph::create(h.n, static_cast<int>(orbits.size()), h.edges,
                               std::move(loops));
}

LoopedGraph seats_clique(int k) {
    if (k < 2) fail("InvalidParameter", "seat cliques need k >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; u++)
        for (int v = u + 1; v < k; v++) edges.emplace_back(u, v);
    std::vector<std::vector<int>> loops(k, std::vector<int>(k, 0));
    for (int u = 0; u < k; u++) loops[u][u] = 1;
    return LoopedGraph::create(k, k, std::move(edges), std::move(loops));
}

LoopedGraph build_equitable_union(const LoopedGraph& g, int s) {
    require_loopless(g, "build_equitable_union");
    if (s < 1) fail("InvalidParameter", "need at least one copy");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> loops(g.n * s, std::vector<int>(s, 0));
    for (int i = 0; i < s; i++) {
        for (auto [u, v] : g.edges) edges.emplace_back(u + i * g.n, v + i * g.n);
        for (int u = 0; u < g.n; u++) loops[u + i * g.n][i] = 1;
    }
    return LoopedGraph::create(g.n * s, s, std::move(edges), std::move(loops));
}

ColoredDesign extract_coloring(const Decomposition& d) {
    const auto& u = d.graph;
    const int s = u.c;
    if (s < 1 || u.n % s != 0)
        fail("NotAUnionBlockGraph", "vertex count is not a multiple of the color count");
    const int n = u.n / s;

    // Recover the base copy and insist the block graph is exactly the
    // equitable union built from it.
    std::vector<std::pair<int, int>> base_edges;
    for (auto [a, b] : u.edges)
        if (a < n && b < n) base_edges.push_back({a, b});
    LoopedGraph base = LoopedGraph::create(n, 0, base_edges);
    if (build_equitable_union(base, s) != u)
        fail("NotAUnionBlockGraph",
             "block graph is not an equitable union of disjoint copies");
    for (const auto& b : d.blocks)
        if (b.sign != 1)
            fail("SignedInput", "coloring extraction takes honest decompositions");

    ColoredDesign out;
    out.s = s;
    out.design.graph = base;
    out.design.host = HostSpec{d.host.v, d.host.lambda, {}};
    for (const auto& b : d.blocks)
        for (int i = 0; i < s; i++) {
            SignedBlock piece;
            piece.sign = 1;
            piece.map.assign(b.map.begin() + i * n, b.map.begin() + (i + 1) * n);
            out.design.blocks.push_back(std::move(piece));
            out.colors.push_back(i + 1);
        }
    return out;
}

std::vector<int> eulerian_circuit(int vertex_count,
                                  const std::vector<std::pair<int, int>>& arcs) {
    std::vector<long long> in(vertex_count, 0), out_deg(vertex_count, 0);
    std::vector<std::vector<int>> adj(vertex_count);
    for (size_t j = 0; j < arcs.size(); j++) {
        auto [a, b] = arcs[j];
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
            fail("InvalidParameter", "arc endpoint out of range");
        out_deg[a]++;
        in[b]++;
        adj[a].push_back(static_cast<int>(j));
    }
    for (int u = 0; u < vertex_count; u++)
        if (in[u] != out_deg[u])
            fail("ImbalancedArcs", "vertex " + std::to_string(u) + " has in-degree " +
                                       std::to_string(in[u]) + " but out-degree " +
                                       std::to_string(out_deg[u]));
    if (arcs.empty()) return {};

    // Hierholzer, iterative; arcs are consumed in list order per tail vertex.
    std::vector<size_t> next(vertex_count, 0);
    std::vector<int> stack_vert{arcs[0].first}, stack_arc{-1};
    std::vector<int> circuit;
    while (!stack_vert.empty()) {
        int at = stack_vert.back();
        if (next[at] < adj[at].size()) {
            int arc = adj[at][next[at]++];
            stack_vert.push_back(arcs[arc].second);
            stack_arc.push_back(arc);
        } else {
            if (stack_arc.back() >= 0) circuit.push_back(stack_arc.back());
            stack_vert.pop_back();
            stack_arc.pop_back();
        }
    }
    if (circuit.size() != arcs.size())
        fail("DisconnectedArcDigraph",
             "arcs form more than one connected tour; no single circuit exists");
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

std::vector<int> order_blocks(const Decomposition& d, int s_vertex, int t_vertex) {
    const auto& g = d.graph;
    if (g.c != 2 || s_vertex < 0 || s_vertex >= g.n || t_vertex < 0 ||
        t_vertex >= g.n || s_vertex == t_vertex)
        fail("InvalidParameter",
             "ordering needs two colors and distinct marked vertices");
    for (int u = 0; u < g.n; u++)
        for (int i = 0; i < 2; i++) {
            int want = (u == s_vertex && i == 0) || (u == t_vertex && i == 1) ? 1 : 0;
            if (g.loops[u][i] != want)
                fail("InvalidParameter",
                     "block graph must carry exactly one color-0 loop at the start "
                     "vertex and one color-1 loop at the end vertex");
        }
    for (const auto& b : d.blocks)
        if (b.sign != 1)
            fail("SignedInput", "block ordering takes honest decompositions");

    std::vector<std::pair<int, int>> arcs;
    for (const auto& b : d.blocks)
        arcs.emplace_back(b.map[s_vertex], b.map[t_vertex]);
    auto order = eulerian_circuit(d.host.v, arcs);
    if (!order.empty() && !verify_block_ordering(d, order, s_vertex, t_vertex))
        fail("VerificationFailed", "circuit failed the ordering check; this is a bug");
    return order;
}

} // namespace loopdec

#include "loopdec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace loopdec {

LoopedGraph LoopedGraph::create(int n, int c,
                                std::vector<std::pair<int, int>> edges,
                                std::vector<std::vector<int>> loops) {
    if (n < 0 || c < 0)
        fail("MalformedInput", "vertex and color counts must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v)
            fail("MalformedInput", "self-pair in edge list at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            fail("MalformedInput", "edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail("MalformedInput", "duplicate edge");

    if (loops.empty()) loops.assign(n, std::vector<int>(c, 0));
    if (static_cast<int>(loops.size()) != n)
        fail("MalformedInput", "loop matrix must have one row per vertex");
    for (const auto& row : loops) {
        if (static_cast<int>(row.size()) != c)
            fail("MalformedInput", "loop row must have one entry per color");
        for (int e : row)
            if (e < 0) fail("MalformedInput", "negative loop multiplicity");
    }

    LoopedGraph g;
    g.n = n;
    g.c = c;
    g.edges = std::move(edges);
    g.loops = std::move(loops);
    return g;
}

bool LoopedGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> LoopedGraph::degrees() const {
    std::vector<int> d(n, 0);
    for (auto [u, v] : edges) {
        d[u]++;
        d[v]++;
    }
    return d;
}

std::vector<long long> LoopedGraph::loop_totals() const {
    std::vector<long long> t(c, 0);
    for (const auto& row : loops)
        for (int i = 0; i < c; i++) t[i] += row[i];
    return t;
}

bool LoopedGraph::loopless() const {
    for (const auto& row : loops)
        for (int e : row)
            if (e != 0) return false;
    return true;
}

GraphInvariants graph_invariants(const LoopedGraph& g) {
    GraphInvariants inv;
    inv.n = g.n;
    inv.m = g.edge_count();
    inv.loop_totals = g.loop_totals();
    int gg = 0;
    for (int d : g.degrees()) gg = std::gcd(gg, d);
    inv.degree_gcd = gg;
    return inv;
}

std::vector<std::vector<long long>> degree_loop_vectors(const LoopedGraph& g) {
    auto deg = g.degrees();
    std::vector<std::vector<long long>> rows(g.n);
    for (int u = 0; u < g.n; u++) {
        rows[u].resize(g.c + 1);
        rows[u][0] = deg[u];
        for (int i = 0; i < g.c; i++) rows[u][i + 1] = g.loops[u][i];
    }
    return rows;
}

namespace {

struct AutSearch {
    const LoopedGraph& g;
    bool respect_loops;
    std::vector<int> deg;
    std::vector<std::vector<bool>> adj;
    std::vector<int> image;
    std::vector<bool> used;
    std::vector<int> parent; // union-find over vertices
    int orbit_count;

    explicit AutSearch(const LoopedGraph& graph, bool loops_flag)
        : g(graph), respect_loops(loops_flag), deg(graph.degrees()),
          adj(graph.n, std::vector<bool>(graph.n, false)),
          image(graph.n, -1), used(graph.n, false), parent(graph.n),
          orbit_count(graph.n) {
        for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
        for (int u = 0; u < g.n; u++) parent[u] = u;
    }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[b] = a;
            orbit_count--;
        }
    }

    bool compatible(int u, int w) const {
        if (deg[u] != deg[w]) return false;
        if (respect_loops && g.loops[u] != g.loops[w]) return false;
        return true;
    }

    void rec(int u) {
        if (orbit_count == 1) return; // no merge left to discover
        if (u == g.n) {
            for (int x = 0; x < g.n; x++) unite(x, image[x]);
            return;
        }
        for (int w = 0; w < g.n; w++) {
            if (used[w] || !compatible(u, w)) continue;
            bool ok = true;
            for (int x = 0; x < u && ok; x++)
                if (adj[u][x] != adj[w][image[x]]) ok = false;
            if (!ok) continue;
            image[u] = w;
            used[w] = true;
            rec(u + 1);
            used[w] = false;
            image[u] = -1;
        }
    }
};

} // namespace

std::vector<std::vector<int>> automorphism_orbits(const LoopedGraph& g,
                                                  bool respect_loops,
                                                  int vertex_bound) {
    if (g.n > vertex_bound)
        fail("VertexBoundExceeded",
             "automorphism search limited to " + std::to_string(vertex_bound) +
                 " vertices, got " + std::to_string(g.n));
    AutSearch s(g, respect_loops);
    s.rec(0);
    std::vector<std::vector<int>> orbits;
    std::vector<int> where(g.n, -1);
    for (int u = 0; u < g.n; u++) {
        int r = s.find(u);
        if (where[r] < 0) {
            where[r] = static_cast<int>(orbits.size());
            orbits.push_back({});
        }
        orbits[where[r]].push_back(u);
    }
    return orbits; // ordered by least element since vertices ascend
}

std::vector<std::vector<int>> degree_classes(const LoopedGraph& g) {
    auto deg = g.degrees();
    std::vector<int> ds(deg.begin(), deg.end());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::vector<std::vector<int>> classes(ds.size());
    for (int u = 0; u < g.n; u++) {
        int idx = static_cast<int>(std::lower_bound(ds.begin(), ds.end(), deg[u]) -
                                   ds.begin());
        classes[idx].push_back(u);
    }
    return classes;
}

} // namespace loopdec

#pragma once
// Shared fixtures and test-side oracles.  The oracles here are deliberately
// written from the definitions, independent of the library's own reduction
// and tallying code paths.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "loopdec/decomposition.hpp"
#include "loopdec/graph.hpp"

namespace tfix {

// Runs fn and returns the DomainError code it throws ("" when it returns).
template <class F>
std::string code_of(F&& fn) {
    try {
        fn();
    } catch (const loopdec::DomainError& e) {
        return e.code;
    }
    return "";
}

using loopdec::Decomposition;
using loopdec::HostSpec;
using loopdec::LoopedGraph;
using loopdec::SignedBlock;

using Edges = std::vector<std::pair<int, int>>;

inline LoopedGraph bare(int n, Edges e) { return LoopedGraph::create(n, 0, std::move(e)); }

inline LoopedGraph k2() { return bare(2, {{0, 1}}); }
inline LoopedGraph p3() { return bare(3, {{0, 1}, {1, 2}}); }
inline LoopedGraph k3() { return bare(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline LoopedGraph p4() { return bare(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline LoopedGraph c4() { return bare(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline LoopedGraph k4() {
    return bare(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
inline LoopedGraph p5() { return bare(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }
inline LoopedGraph c5() { return bare(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
inline LoopedGraph star(int leaves) {
    Edges e;
    for (int i = 1; i <= leaves; i++) e.push_back({0, i});
    return bare(leaves + 1, std::move(e));
}

// Two triangles sharing the center vertex 0.
inline LoopedGraph bowtie() {
    return bare(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
}

// Bowtie with four loops of each of two colors.  Variant A spreads color 0
// over the center and three wings; it has alpha = 6.  Variant B moves one of
// those loops so the center carries only color 0; it has alpha = 12.  Both
// have the same underlying graph and the same loop totals (4, 4).
inline LoopedGraph bowtie_two_color_a() {
    return LoopedGraph::create(5, 2, bowtie().edges,
                               {{1, 1}, {1, 0}, {1, 1}, {1, 1}, {0, 1}});
}
inline LoopedGraph bowtie_two_color_b() {
    return LoopedGraph::create(5, 2, bowtie().edges,
                               {{1, 0}, {1, 1}, {1, 1}, {1, 1}, {0, 1}});
}

// 5-cycle with loop vector ((2,0), (1,0), (1,2), (0,3), (1,0)); totals (5,5).
inline LoopedGraph c5_two_color() {
    return LoopedGraph::create(5, 2, c5().edges,
                               {{2, 0}, {1, 0}, {1, 2}, {0, 3}, {1, 0}});
}

// A six-block signed decomposition of K_5^[(2,2);1] by c5_two_color: four
// blocks with coefficient +1 and two with -1.
inline Decomposition c5_signed_certificate() {
    Decomposition d;
    d.graph = c5_two_color();
    d.host = HostSpec{5, 1, {2, 2}};
    d.blocks = {{{0, 1, 2, 3, 4}, 1},  {{0, 3, 1, 4, 2}, 1}, {{2, 3, 4, 0, 1}, 1},
                {{4, 1, 3, 0, 2}, 1},  {{2, 1, 0, 4, 3}, -1}, {{4, 2, 0, 3, 1}, -1}};
    return d;
}

// Path 0-1-2-3 with one color-0 loop at the end 0 and one color-1 loop at
// the mid vertex 1; loop totals (1,1).
inline LoopedGraph p4_end_mid_loops() {
    return LoopedGraph::create(4, 2, p4().edges, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
}

// Path 0-1-2-3 with one color-0 loop at end 0 and one color-1 loop at end 3.
inline LoopedGraph p4_marked_ends() {
    return LoopedGraph::create(4, 2, p4().edges, {{1, 0}, {0, 0}, {0, 0}, {0, 1}});
}

// Directed-triangle gadget design: K_2 with a color-0 loop at 0 and a
// color-1 loop at 1, decomposing K_3^[(1,1);1] as a 3-cycle of oriented
// edges.
inline Decomposition k2_gadget_triangle() {
    Decomposition d;
    d.graph = LoopedGraph::create(2, 2, {{0, 1}}, {{1, 0}, {0, 1}});
    d.host = HostSpec{3, 1, {1, 1}};
    d.blocks = {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 0}, 1}};
    return d;
}

// ---- test-side oracles ----------------------------------------------------

// Brute-force alpha from the definition: scan small coefficient boxes for
// integer combinations proportional to (1, l/2m) and gcd every multiple that
// appears.  Any gcd of achieved multiples is itself achievable, and the
// all-ones vector always achieves 2m, so the result is a lattice-member
// multiple of the true alpha; the boxes are large enough for the graph sizes
// the tests feed in.
inline long long oracle_alpha(const LoopedGraph& g, int box = 3) {
    auto rows = loopdec::degree_loop_vectors(g);
    auto ell = g.loop_totals();
    const long long two_m = 2LL * g.edge_count();
    long long best = two_m;
    std::vector<int> s(g.n, -box);
    while (true) {
        long long k = 0;
        for (int u = 0; u < g.n; u++) k += s[u] * rows[u][0];
        if (k != 0) {
            bool prop = true;
            for (int i = 0; i < g.c && prop; i++) {
                long long dot = 0;
                for (int u = 0; u < g.n; u++) dot += s[u] * rows[u][i + 1];
                prop = dot * two_m == k * ell[i];
            }
            if (prop) best = std::gcd(best, std::abs(k));
        }
        int u = 0;
        while (u < g.n && s[u] == box) s[u++] = -box;
        if (u == g.n) break;
        s[u]++;
    }
    return best;
}

// Map-based re-tally of a decomposition, coded apart from the library's
// matrix-based verifier.
inline bool oracle_covers(const Decomposition& d) {
    std::map<std::pair<int, int>, long long> edges;
    std::map<std::pair<int, int>, long long> loops;
    for (const auto& b : d.blocks) {
        for (auto [x, y] : d.graph.edges) {
            int hu = b.map[x], hv = b.map[y];
            if (hu > hv) std::swap(hu, hv);
            edges[{hu, hv}] += b.sign;
        }
        for (int gv = 0; gv < d.graph.n; gv++)
            for (int i = 0; i < d.graph.c; i++)
                if (d.graph.loops[gv][i])
                    loops[{b.map[gv], i}] += b.sign * d.graph.loops[gv][i];
    }
    for (int u = 0; u < d.host.v; u++)
        for (int w = u + 1; w < d.host.v; w++) {
            auto it = edges.find({u, w});
            if ((it == edges.end() ? 0 : it->second) != d.host.lambda) return false;
        }
    for (int u = 0; u < d.host.v; u++)
        for (int i = 0; i < d.graph.c; i++) {
            auto it = loops.find({u, i});
            if ((it == loops.end() ? 0 : it->second) != d.host.mu[i]) return false;
        }
    return true;
}

// Automorphism count by plain permutation scan.
inline long long aut_count(const LoopedGraph& g, bool respect_loops) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    long long cnt = 0;
    do {
        bool ok = true;
        for (auto [u, v] : g.edges)
            if (!g.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        for (int u = 0; u < g.n && ok && respect_loops; u++)
            if (g.loops[perm[u]] != g.loops[u]) ok = false;
        if (ok) cnt++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cnt;
}

// Deterministic random looped graph with at least one edge.
inline LoopedGraph random_graph(std::mt19937_64& rng, int max_n, int max_c,
                                int max_mult) {
    while (true) {
        int n = 2 + static_cast<int>(rng() % (max_n - 1));
        int c = static_cast<int>(rng() % (max_c + 1));
        Edges e;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng() % 2) e.push_back({u, v});
        if (e.empty()) continue;
        std::vector<std::vector<int>> loops(n, std::vector<int>(c, 0));
        for (int u = 0; u < n; u++)
            for (int i = 0; i < c; i++)
                loops[u][i] = static_cast<int>(rng() % (max_mult + 1));
        return LoopedGraph::create(n, c, std::move(e), std::move(loops));
    }
}

// Fixed corpus for the signed-solver sweep: 16 shapes x 5 loop decorations,
// all with n <= 5, c <= 2 and unit multiplicities.
inline std::vector<LoopedGraph> solver_corpus() {
    std::vector<LoopedGraph> shapes = {
        k2(), p3(), k3(), p4(),      star(3), c4(),
        bare(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),                  // paw
        bare(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}),          // diamond
        k4(), p5(), c5(), star(4),
        bare(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}),          // bull
        bowtie(),
        bare(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}}),  // house
        bare(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                 {1, 4}, {2, 3}, {2, 4}, {3, 4}}),                  // K5
    };
    std::vector<LoopedGraph> out;
    for (const auto& h : shapes) {
        int n = h.n;
        out.push_back(h);
        std::vector<std::vector<int>> one(n, std::vector<int>(1, 0));
        one[0][0] = 1;
        out.push_back(LoopedGraph::create(n, 1, h.edges, one));
        out.push_back(
            LoopedGraph::create(n, 1, h.edges, std::vector<std::vector<int>>(n, {1})));
        std::vector<std::vector<int>> ends(n, std::vector<int>(2, 0));
        ends[0][0] = 1;
        ends[n - 1][1] = 1;
        out.push_back(LoopedGraph::create(n, 2, h.edges, ends));
        std::vector<std::vector<int>> mixed(n, std::vector<int>(2, 0));
        for (int u = 0; u < n; u++) mixed[u][0] = 1;
        mixed[0][1] = 1;
        out.push_back(LoopedGraph::create(n, 2, h.edges, mixed));
    }
    return out; // 80 graphs
}

} // namespace tfix

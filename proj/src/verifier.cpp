#include "loopdec/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace loopdec {

namespace {

void check_block_shape(const Decomposition& d) {
    if (static_cast<int>(d.host.mu.size()) != d.graph.c)
        fail("MalformedBlock", "host mu must have one entry per loop color");
    for (const auto& b : d.blocks) {
        if (static_cast<int>(b.map.size()) != d.graph.n)
            fail("MalformedBlock", "embedding has wrong length");
        std::set<int> seen;
        for (int x : b.map) {
            if (x < 0 || x >= d.host.v)
                fail("MalformedBlock", "host vertex out of range");
            if (!seen.insert(x).second)
                fail("MalformedBlock", "embedding is not injective");
        }
    }
}

void require_unsigned(const Decomposition& d) {
    for (const auto& b : d.blocks)
        if (b.sign != 1)
            fail("SignedInput",
                 "balance checks take honest decompositions (all coefficients +1)");
}

} // namespace

VerifyReport verify_decomposition(const Decomposition& d) {
    check_block_shape(d);
    const int v = d.host.v;
    std::vector<std::vector<long long>> edge_got(v, std::vector<long long>(v, 0));
    std::vector<std::vector<long long>> loop_got(v, std::vector<long long>(d.graph.c, 0));
    for (const auto& b : d.blocks) {
        for (auto [x, y] : d.graph.edges) {
            int hu = b.map[x], hv = b.map[y];
            if (hu > hv) std::swap(hu, hv);
            edge_got[hu][hv] += b.sign;
        }
        for (int gv = 0; gv < d.graph.n; gv++)
            for (int i = 0; i < d.graph.c; i++)
                loop_got[b.map[gv]][i] += b.sign * d.graph.loops[gv][i];
    }
    VerifyReport rep;
    for (int u = 0; u < v; u++)
        for (int w = u + 1; w < v; w++)
            if (edge_got[u][w] != d.host.lambda)
                rep.edge_defects.push_back({u, w, edge_got[u][w], d.host.lambda});
    for (int u = 0; u < v; u++)
        for (int i = 0; i < d.graph.c; i++)
            if (loop_got[u][i] != d.host.mu[i])
                rep.loop_defects.push_back({u, i, loop_got[u][i], d.host.mu[i]});
    rep.pass = rep.edge_defects.empty() && rep.loop_defects.empty();
    return rep;
}

BalanceReport verify_balanced(const Decomposition& d) {
    check_block_shape(d);
    require_unsigned(d);
    BalanceReport rep;
    rep.replication.assign(d.host.v, 0);
    for (const auto& b : d.blocks)
        for (int x : b.map) rep.replication[x]++;
    rep.pass = std::all_of(rep.replication.begin(), rep.replication.end(),
                           [&](long long r) { return r == rep.replication[0]; });
    return rep;
}

namespace {

ClassBalanceReport class_balance(const Decomposition& d,
                                 const std::vector<std::vector<int>>& classes) {
    ClassBalanceReport rep;
    rep.classes = classes;
    std::vector<int> class_of(d.graph.n, -1);
    for (size_t a = 0; a < classes.size(); a++)
        for (int gv : classes[a]) class_of[gv] = static_cast<int>(a);
    rep.counts.assign(classes.size(), std::vector<long long>(d.host.v, 0));
    for (const auto& b : d.blocks)
        for (int gv = 0; gv < d.graph.n; gv++)
            rep.counts[class_of[gv]][b.map[gv]]++;
    rep.pass = true;
    for (const auto& row : rep.counts)
        for (long long x : row)
            if (x != row[0]) rep.pass = false;
    return rep;
}

} // namespace

ClassBalanceReport verify_degree_balanced(const Decomposition& d) {
    check_block_shape(d);
    require_unsigned(d);
    return class_balance(d, degree_classes(d.graph));
}

ClassBalanceReport verify_orbit_balanced(const Decomposition& d) {
    check_block_shape(d);
    require_unsigned(d);
    LoopedGraph bare = LoopedGraph::create(d.graph.n, 0, d.graph.edges);
    return class_balance(d, automorphism_orbits(bare, false));
}

ColoringReport verify_equitable_coloring(const Decomposition& d,
                                         const std::vector<int>& colors,
                                         int s, int p) {
    check_block_shape(d);
    require_unsigned(d);
    if (s < 1 || p < 1 || p > s)
        fail("InvalidParameter", "need 1 <= p <= s");
    if (colors.size() != d.blocks.size())
        fail("InvalidParameter", "one color per block required");
    for (int col : colors)
        if (col < 1 || col > s)
            fail("BadColorRange", "block color " + std::to_string(col) +
                                      " outside 1.." + std::to_string(s));

    std::vector<std::vector<long long>> b_cnt(d.host.v, std::vector<long long>(s, 0));
    for (size_t k = 0; k < d.blocks.size(); k++)
        for (int x : d.blocks[k].map) b_cnt[x][colors[k] - 1]++;

    ColoringReport rep;
    for (int u = 0; u < d.host.v; u++) {
        long long mn = 0, mx = 0;
        int seen = 0;
        for (int i = 0; i < s; i++) {
            if (b_cnt[u][i] == 0) continue;
            if (seen == 0) mn = mx = b_cnt[u][i];
            mn = std::min(mn, b_cnt[u][i]);
            mx = std::max(mx, b_cnt[u][i]);
            seen++;
        }
        if (seen != p)
            rep.defects.push_back("vertex " + std::to_string(u) + " sees " +
                                  std::to_string(seen) + " colors, wants " +
                                  std::to_string(p));
        else if (mx - mn > 1)
            rep.defects.push_back("vertex " + std::to_string(u) +
                                  " has color counts spread " +
                                  std::to_string(mx - mn));
    }
    rep.pass = rep.defects.empty();
    return rep;
}

bool verify_block_ordering(const Decomposition& d, const std::vector<int>& order,
                           int s_vertex, int t_vertex) {
    check_block_shape(d);
    if (s_vertex < 0 || s_vertex >= d.graph.n || t_vertex < 0 ||
        t_vertex >= d.graph.n)
        fail("InvalidParameter", "ordering vertices out of range");
    const size_t b = d.blocks.size();
    if (order.size() != b)
        fail("NotAPermutation", "order length differs from block count");
    std::vector<bool> hit(b, false);
    for (int k : order) {
        if (k < 0 || k >= static_cast<int>(b) || hit[k])
            fail("NotAPermutation", "order is not a permutation of block indices");
        hit[k] = true;
    }
    for (size_t i = 0; i < b; i++) {
        const auto& cur = d.blocks[order[i]];
        const auto& nxt = d.blocks[order[(i + 1) % b]];
        if (cur.map[t_vertex] != nxt.map[s_vertex]) return false;
    }
    return true;
}

} // namespace loopdec

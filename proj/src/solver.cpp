#include "loopdec/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "loopdec/hnf.hpp"
#include "loopdec/lattice.hpp"
#include "loopdec/verifier.hpp"

namespace loopdec {

std::vector<std::vector<int>> enumerate_blocks(const LoopedGraph& g, int v,
                                               int vertex_bound) {
    if (v < g.n)
        fail("InvalidParameter", "host must have at least as many vertices as g");
    if (v > vertex_bound)
        fail("VertexBoundExceeded",
             "embedding enumeration limited to " + std::to_string(vertex_bound) +
                 " host vertices, got " + std::to_string(v));

    // Two embeddings are the same decorated copy exactly when they produce
    // the same image edge set and the same image loop placement; dedup on
    // that signature keeps the lexicographically least map of each copy.
    std::vector<std::vector<int>> out;
    std::set<std::pair<std::vector<std::pair<int, int>>, std::vector<std::vector<int>>>>
        seen;
    std::vector<int> map(g.n, -1);
    std::vector<bool> used(v, false);
    auto rec = [&](auto&& self, int gv) -> void {
        if (gv == g.n) {
            std::vector<std::pair<int, int>> img_edges;
            for (auto [a, b] : g.edges) {
                int x = map[a], y = map[b];
                if (x > y) std::swap(x, y);
                img_edges.emplace_back(x, y);
            }
            std::sort(img_edges.begin(), img_edges.end());
            // host vertices without loops keep an empty row, so images that
            // differ only by unused host vertices still collide
            std::vector<std::vector<int>> img_loops(v);
            for (int u = 0; u < g.n; u++)
                if (!g.loops[u].empty() &&
                    *std::max_element(g.loops[u].begin(), g.loops[u].end()) > 0)
                    img_loops[map[u]] = g.loops[u];
            if (seen.emplace(std::move(img_edges), std::move(img_loops)).second)
                out.push_back(map);
            return;
        }
        for (int h = 0; h < v; h++) {
            if (used[h]) continue;
            map[gv] = h;
            used[h] = true;
            self(self, gv + 1);
            used[h] = false;
        }
        map[gv] = -1;
    };
    rec(rec, 0);
    return out; // lexicographic: maps are generated in lexicographic order
}

int LinearSystem::row_of_pair(int a, int b) const {
    if (a > b) std::swap(a, b);
    // pairs are listed (0,1), (0,2), ..., (0,v-1), (1,2), ...
    return a * v - a * (a + 1) / 2 + (b - a - 1);
}

int LinearSystem::row_of_loop(int vertex, int color) const {
    return static_cast<int>(pair_rows.size()) + vertex * c + color;
}

std::string LinearSystem::row_label(int r) const {
    if (r < static_cast<int>(pair_rows.size()))
        return "edge {" + std::to_string(pair_rows[r].first) + "," +
               std::to_string(pair_rows[r].second) + "}";
    int k = r - static_cast<int>(pair_rows.size());
    return "loops of color " + std::to_string(k % c) + " at vertex " +
           std::to_string(k / c);
}

LinearSystem build_system(const LoopedGraph& g,
                          const std::vector<std::vector<int>>& embeddings,
                          int v, long long lambda,
                          const std::vector<long long>& mu) {
    LinearSystem sys;
    sys.v = v;
    sys.c = g.c;
    for (int a = 0; a < v; a++)
        for (int b = a + 1; b < v; b++) sys.pair_rows.emplace_back(a, b);
    sys.rhs.assign(sys.pair_rows.size(), lambda);
    for (int u = 0; u < v; u++)
        for (int i = 0; i < g.c; i++) sys.rhs.push_back(mu[i]);
    sys.columns.reserve(embeddings.size());
    for (const auto& map : embeddings) {
        std::map<int, long long> col;
        for (auto [a, b] : g.edges) col[sys.row_of_pair(map[a], map[b])] += 1;
        for (int u = 0; u < g.n; u++)
            for (int i = 0; i < g.c; i++)
                if (g.loops[u][i])
                    col[sys.row_of_loop(map[u], i)] += g.loops[u][i];
        sys.columns.emplace_back(col.begin(), col.end());
    }
    return sys;
}

namespace {

std::vector<Int> dense_column(const LinearSystem& sys, int j) {
    std::vector<Int> col(sys.rows(), 0);
    for (auto [r, val] : sys.columns[j]) col[r] = val;
    return col;
}

} // namespace

Decomposition solve_signed(const LoopedGraph& g, int v, long long lambda,
                           unsigned long long seed, int vertex_bound) {
    // Usage errors outrank admissibility: a host we cannot even enumerate
    // embeddings for should not be reported as merely inadmissible.
    if (v < g.n)
        fail("InvalidParameter", "host must have at least as many vertices as g");
    if (v > vertex_bound)
        fail("VertexBoundExceeded",
             "embedding enumeration limited to " + std::to_string(vertex_bound) +
                 " host vertices, got " + std::to_string(v));

    auto adm = is_admissible(g, v, lambda);
    if (!adm.admissible)
        fail("Inconsistent",
             std::string("not admissible: ") +
                 (adm.global_ok ? "" : "2m does not divide lambda*v*(v-1); ") +
                 (adm.local_ok ? "" : "alpha = " + std::to_string(adm.alpha) +
                                          " does not divide lambda*(v-1)"));

    auto embeddings = enumerate_blocks(g, v, vertex_bound);
    LinearSystem sys = build_system(g, embeddings, v, lambda, adm.mu);

    std::vector<int> col_order(embeddings.size());
    std::iota(col_order.begin(), col_order.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(col_order.begin(), col_order.end(), rng);
    }

    // Pass 1: find the columns that actually grow the lattice.
    LatticeBasis probe(sys.rows());
    std::vector<int> kept;
    for (int j : col_order)
        if (probe.insert(dense_column(sys, j))) kept.push_back(j);

    // Pass 2: same lattice from the kept columns only, now tracking how each
    // basis vector combines them, so a membership certificate for the target
    // turns into signed block coefficients.
    LatticeBasis tracked(sys.rows(), static_cast<int>(kept.size()));
    for (int j : kept) tracked.insert(dense_column(sys, j));

    std::vector<Int> target(sys.rhs.begin(), sys.rhs.end());
    int stuck = -1;
    auto coeffs = tracked.member(std::move(target), &stuck);
    if (!coeffs)
        fail("Inconsistent",
             "no integer combination of blocks meets the coverage targets; "
             "reduction stuck at row: " +
                 sys.row_label(stuck));

    Decomposition d;
    d.graph = g;
    d.host = HostSpec{v, lambda, adm.mu};
    for (size_t i = 0; i < kept.size(); i++) {
        const Int& x = (*coeffs)[i];
        if (x == 0) continue;
        if (x < -(Int(1) << 62) || x > (Int(1) << 62))
            fail("Internal", "solution coefficient overflows the block type");
        d.blocks.push_back({embeddings[kept[i]], static_cast<long long>(x)});
    }
    std::sort(d.blocks.begin(), d.blocks.end(),
              [](const SignedBlock& a, const SignedBlock& b) { return a.map < b.map; });

    if (!verify_decomposition(d).pass)
        fail("VerificationFailed", "signed solution failed re-verification; this is a bug");
    return d;
}

Decomposition solve_nonnegative(const LoopedGraph& g, int v, long long lambda,
                                long long budget_nodes, int vertex_bound) {
    if (v < g.n)
        fail("InvalidParameter", "host must have at least as many vertices as g");
    if (v > vertex_bound)
        fail("VertexBoundExceeded",
             "embedding enumeration limited to " + std::to_string(vertex_bound) +
                 " host vertices, got " + std::to_string(v));

    auto adm = is_admissible(g, v, lambda);
    if (!adm.admissible)
        fail("Inconsistent", "not admissible, no honest decomposition can exist");

    auto embeddings = enumerate_blocks(g, v, vertex_bound);

    // residual coverage targets
    std::vector<std::vector<long long>> edge_left(v, std::vector<long long>(v, 0));
    for (int a = 0; a < v; a++)
        for (int b = a + 1; b < v; b++) edge_left[a][b] = lambda;
    std::vector<std::vector<long long>> loop_left(v,
                                                  std::vector<long long>(g.c, 0));
    for (int u = 0; u < v; u++)
        for (int i = 0; i < g.c; i++) loop_left[u][i] = adm.mu[i];

    // Blocks covering each host pair, to drive the branch on the first
    // uncovered pair.
    std::vector<std::vector<std::vector<int>>> covering(
        v, std::vector<std::vector<int>>(v));
    for (size_t j = 0; j < embeddings.size(); j++)
        for (auto [a, b] : g.edges) {
            int x = embeddings[j][a], y = embeddings[j][b];
            if (x > y) std::swap(x, y);
            covering[x][y].push_back(static_cast<int>(j));
        }

    long long nodes = 0;
    std::vector<int> chosen;
    auto fits = [&](int j) {
        for (auto [a, b] : g.edges) {
            int x = embeddings[j][a], y = embeddings[j][b];
            if (x > y) std::swap(x, y);
            if (edge_left[x][y] <= 0) return false;
        }
        for (int u = 0; u < g.n; u++)
            for (int i = 0; i < g.c; i++)
                if (g.loops[u][i] > loop_left[embeddings[j][u]][i]) return false;
        return true;
    };
    auto apply = [&](int j, long long dir) {
        for (auto [a, b] : g.edges) {
            int x = embeddings[j][a], y = embeddings[j][b];
            if (x > y) std::swap(x, y);
            edge_left[x][y] -= dir;
        }
        for (int u = 0; u < g.n; u++)
            for (int i = 0; i < g.c; i++)
                loop_left[embeddings[j][u]][i] -= dir * g.loops[u][i];
    };

    auto rec = [&](auto&& self) -> bool {
        if (++nodes > budget_nodes)
            fail("NotFoundWithinBudget",
                 "node budget " + std::to_string(budget_nodes) + " exhausted");
        int fa = -1, fb = -1;
        for (int a = 0; a < v && fa < 0; a++)
            for (int b = a + 1; b < v; b++)
                if (edge_left[a][b] > 0) {
                    fa = a;
                    fb = b;
                    break;
                }
        if (fa < 0) {
            for (int u = 0; u < v; u++)
                for (int i = 0; i < g.c; i++)
                    if (loop_left[u][i] != 0) return false;
            return true;
        }
        for (int j : covering[fa][fb]) {
            if (!fits(j)) continue;
            apply(j, 1);
            chosen.push_back(j);
            if (self(self)) return true;
            chosen.pop_back();
            apply(j, -1);
        }
        return false;
    };

    if (!rec(rec))
        fail("NotFoundWithinBudget",
             "search space exhausted without finding an honest decomposition");

    Decomposition d;
    d.graph = g;
    d.host = HostSpec{v, lambda, adm.mu};
    std::map<std::vector<int>, long long> agg;
    for (int j : chosen) agg[embeddings[j]]++;
    for (auto& [map, count] : agg) d.blocks.push_back({map, count});
    if (!verify_decomposition(d).pass)
        fail("VerificationFailed", "search result failed re-verification; this is a bug");
    return d;
}

} // namespace loopdec

#include "loopdec/cyclotomic.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <string>

#include "loopdec/lattice.hpp"
#include "loopdec/verifier.hpp"

namespace loopdec {

void validate_base_block(const Field& f, const BaseBlock& b) {
    const auto& g = b.graph;
    const int m = g.edge_count();
    if (m == 0) fail("NoEdges", "base block needs at least one edge");
    if ((f.q() - 1) % (2LL * m) != 0)
        fail("BadCongruence", "need q = 1 (mod 2m)");
    if (static_cast<int>(b.placement.size()) != g.n)
        fail("InvalidParameter", "placement has wrong length");
    std::vector<int> sorted = b.placement;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.front() < 0 || sorted.back() >= f.q())
        fail("InvalidParameter", "placement must be injective into the field");
    CosetSystem cs(f, m);
    std::vector<bool> used(m, false);
    for (auto [u, v] : g.edges) {
        int diff = f.sub(b.placement[u], b.placement[v]);
        int idx = cs.coset_of(diff); // same coset as the negated difference
        if (used[idx])
            fail("InvalidParameter",
                 "edge differences repeat coset " + std::to_string(idx));
        used[idx] = true;
    }
}

BaseBlock find_base_block(const LoopedGraph& g, const Field& f,
                          unsigned long long seed, long long timeout_ms) {
    const int m = g.edge_count();
    if (m == 0) fail("NoEdges", "base block needs at least one edge");
    if ((f.q() - 1) % (2LL * m) != 0)
        fail("BadCongruence",
             "need q = 1 (mod 2m); q = " + std::to_string(f.q()) +
                 ", m = " + std::to_string(m));
    if (g.n > f.q()) fail("SearchExhausted", "more vertices than field elements");
    CosetSystem cs(f, m);

    // Place vertices in an order that keeps each new vertex adjacent to an
    // already placed one where possible, so coset clashes prune early.
    std::vector<int> order;
    {
        std::vector<bool> placed(g.n, false);
        auto deg = g.degrees();
        while (static_cast<int>(order.size()) < g.n) {
            int best = -1, best_adj = -1, best_deg = -1;
            for (int u = 0; u < g.n; u++) {
                if (placed[u]) continue;
                int adj = 0;
                for (auto [a, b] : g.edges)
                    if ((a == u && placed[b]) || (b == u && placed[a])) adj++;
                if (adj > best_adj || (adj == best_adj && deg[u] > best_deg)) {
                    best = u;
                    best_adj = adj;
                    best_deg = deg[u];
                }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }

    std::vector<int> candidates(f.q());
    std::iota(candidates.begin(), candidates.end(), 0);
    std::mt19937_64 rng(seed);
    if (seed != 0) std::shuffle(candidates.begin(), candidates.end(), rng);

    const auto t0 = std::chrono::steady_clock::now();
    long long nodes = 0;
    std::vector<int> place(g.n, -1);
    std::vector<bool> taken(f.q(), false);
    std::vector<bool> coset_used(m, false);

    // Any valid placement can be shifted so the first vertex sits at 0.
    struct Done {};
    auto rec = [&](auto&& self, size_t depth) -> void {
        if (depth == order.size()) throw Done{};
        int u = order[depth];
        for (int cand : candidates) {
            if (depth == 0 && cand != 0) continue;
            if (taken[cand]) continue;
            if (++nodes % 1024 == 0) {
                auto dt = std::chrono::steady_clock::now() - t0;
                if (std::chrono::duration_cast<std::chrono::milliseconds>(dt).count() >
                    timeout_ms)
                    fail("Timeout", "base-block search timed out");
            }
            std::vector<int> touched;
            bool ok = true;
            for (auto [a, b] : g.edges) {
                int w = -1;
                if (a == u && place[b] >= 0) w = place[b];
                if (b == u && place[a] >= 0) w = place[a];
                if (w < 0) continue;
                int idx = cs.coset_of(f.sub(cand, w));
                if (coset_used[idx]) {
                    ok = false;
                    break;
                }
                coset_used[idx] = true;
                touched.push_back(idx);
            }
            if (ok) {
                place[u] = cand;
                taken[cand] = true;
                self(self, depth + 1);
                place[u] = -1;
                taken[cand] = false;
            }
            for (int idx : touched) coset_used[idx] = false;
        }
    };
    try {
        rec(rec, 0);
    } catch (const Done&) {
        BaseBlock b{g, f.q(), place};
        validate_base_block(f, b);
        return b;
    }
    fail("SearchExhausted", "no base block exists for this graph over GF(" +
                                std::to_string(f.q()) + ")");
}

Decomposition develop(const Field& f, const BaseBlock& base, long long lambda) {
    if (lambda < 1) fail("InvalidParameter", "lambda must be positive");
    validate_base_block(f, base);
    const auto& g = base.graph;
    const int m = g.edge_count();
    auto transversal = pm1_transversal(f, m);

    Decomposition d;
    d.graph = g;
    d.host = host_for(g, static_cast<int>(f.q()), lambda);
    for (long long copy = 0; copy < lambda; copy++)
        for (int t : transversal)
            for (int a = 0; a < f.q(); a++) {
                SignedBlock b;
                b.sign = 1;
                b.map.resize(g.n);
                for (int gv = 0; gv < g.n; gv++)
                    b.map[gv] = f.add(f.mul(t, base.placement[gv]), a);
                d.blocks.push_back(std::move(b));
            }
    return d;
}

Decomposition construct_cyclotomic(const LoopedGraph& g, long long q,
                                   long long lambda, unsigned long long seed,
                                   long long timeout_ms) {
    Field f(q);
    BaseBlock base = find_base_block(g, f, seed, timeout_ms);
    Decomposition d = develop(f, base, lambda);
    if (!verify_decomposition(d).pass)
        fail("VerificationFailed",
             "developed family failed verification; this is a bug");
    return d;
}

} // namespace loopdec

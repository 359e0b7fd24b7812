#include "loopdec/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "loopdec/hnf.hpp"

namespace loopdec {

namespace {

std::vector<long long> divisors_ascending(long long x) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= x; d++) {
        if (x % d) continue;
        small.push_back(d);
        if (d != x / d) large.push_back(x / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

long long compute_alpha(const LoopedGraph& g) {
    if (g.edge_count() == 0)
        fail("NoEdges", "alpha needs at least one edge");
    const long long two_m = 2LL * g.edge_count();
    const auto rows = degree_loop_vectors(g);
    const auto ell = g.loop_totals();

    LatticeBasis basis(g.c + 1);
    std::vector<Int> sum(g.c + 1, 0);
    for (const auto& row : rows) {
        std::vector<Int> v(row.begin(), row.end());
        for (int i = 0; i <= g.c; i++) sum[i] += v[i];
        basis.insert(std::move(v));
    }
    // The degree-loop vectors sum to (2m, l_1, ..., l_c), which is why alpha
    // always exists and divides 2m.
    bool identity = sum[0] == two_m;
    for (int i = 0; i < g.c; i++) identity = identity && sum[i + 1] == ell[i];
    if (!identity)
        fail("Internal", "degree-loop vectors violated their sum identity");

    for (long long a : divisors_ascending(two_m)) {
        bool integral = true;
        std::vector<Int> target(g.c + 1);
        target[0] = a;
        for (int i = 0; i < g.c; i++) {
            if ((a * ell[i]) % two_m != 0) {
                integral = false;
                break;
            }
            target[i + 1] = a * ell[i] / two_m;
        }
        if (!integral) continue;
        if (basis.member(std::move(target))) return a;
    }
    fail("Internal", "alpha search fell through its divisor bound"); // unreachable
}

std::vector<long long> compute_mu(const LoopedGraph& g, int v, long long lambda) {
    if (g.edge_count() == 0) fail("NoEdges", "mu needs at least one edge");
    if (v < 0 || lambda < 1)
        fail("InvalidParameter", "need v >= 0 and lambda >= 1");
    std::vector<long long> mu(g.c, 0);
    if (v == 0) return mu;
    const long long two_m = 2LL * g.edge_count();
    const auto ell = g.loop_totals();
    for (int i = 0; i < g.c; i++) {
        long long num = lambda * ell[i] % two_m * (v - 1) % two_m;
        if (num % two_m != 0)
            fail("NonIntegralMu", "mu_" + std::to_string(i) +
                                      " = lambda*l_i*(v-1)/(2m) is not an integer");
        mu[i] = lambda * ell[i] / two_m * (v - 1) +
                lambda * ell[i] % two_m * (v - 1) / two_m;
    }
    return mu;
}

AdmissibilityReport is_admissible(const LoopedGraph& g, int v, long long lambda) {
    if (v < 0 || lambda < 1)
        fail("InvalidParameter", "need v >= 0 and lambda >= 1");
    AdmissibilityReport rep;
    rep.alpha = compute_alpha(g);
    if (v <= 1) {
        // Empty host: admissible by vacuity, with no loops to place.
        rep.admissible = rep.global_ok = rep.local_ok = true;
        rep.mu.assign(g.c, 0);
        return rep;
    }
    const long long two_m = 2LL * g.edge_count();
    rep.global_ok = (lambda * v % two_m * (v - 1)) % two_m == 0;
    rep.local_ok = (lambda % rep.alpha * (v - 1)) % rep.alpha == 0;
    rep.admissible = rep.global_ok && rep.local_ok;
    if (rep.admissible) rep.mu = compute_mu(g, v, lambda);
    return rep;
}

std::vector<long long> admissible_residues(const LoopedGraph& g, long long lambda,
                                           long long modulus) {
    if (modulus < 1) fail("InvalidParameter", "modulus must be positive");
    if (g.edge_count() == 0) fail("NoEdges", "residues need at least one edge");
    const long long period = 2LL * g.edge_count();
    const long long span = std::lcm(modulus, period);
    std::vector<long long> out;
    for (long long r = 0; r < modulus; r++) {
        // One representative per class mod lcm(modulus, period) meeting
        // v = r (mod modulus), all shifted to v >= 2; never fewer than two.
        long long reps = std::max<long long>(2, span / modulus);
        bool all_ok = true;
        for (long long j = 0; j < reps && all_ok; j++) {
            long long v = r + modulus * j;
            while (v < 2) v += span;
            all_ok = is_admissible(g, static_cast<int>(v), lambda).admissible;
        }
        if (all_ok) out.push_back(r);
    }
    return out;
}

HostSpec host_for(const LoopedGraph& g, int v, long long lambda) {
    HostSpec h;
    h.v = v;
    h.lambda = lambda;
    h.mu = compute_mu(g, v, lambda);
    return h;
}

} // namespace loopdec

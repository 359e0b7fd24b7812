#pragma once
#include <vector>

#include "loopdec/decomposition.hpp"
#include "loopdec/graph.hpp"

namespace loopdec {

// Least positive alpha such that alpha * (1, l_1/(2m), ..., l_c/(2m)) lies in
// the integer lattice spanned by the degree-loop vectors of g.  alpha always
// divides 2m (the vectors sum to (2m, l_1, ..., l_c)), so candidates are the
// divisors of 2m in increasing order.  Requires at least one edge.
long long compute_alpha(const LoopedGraph& g);

// mu_i = lambda * l_i * (v-1) / (2m); every entry must be exactly integral
// (error NonIntegralMu otherwise).  v = 0 yields all zeros.
std::vector<long long> compute_mu(const LoopedGraph& g, int v, long long lambda);

struct AdmissibilityReport {
    bool admissible = false;
    bool global_ok = false; // 2m | lambda * v * (v-1)
    bool local_ok = false;  // alpha | lambda * (v-1)
    long long alpha = 0;
    std::vector<long long> mu; // filled when admissible
};

// v = 0 and v = 1 are admissible by vacuity (empty host, mu = 0).
AdmissibilityReport is_admissible(const LoopedGraph& g, int v, long long lambda);

// Residues r in [0, modulus) whose entire class v = r (mod modulus), v >= 2,
// is admissible.  The admissibility predicate is periodic in v with period
// dividing 2m, so testing one representative per class mod lcm(modulus, 2m)
// (and never fewer than two per residue) is exact.
std::vector<long long> admissible_residues(const LoopedGraph& g, long long lambda,
                                           long long modulus);

// Convenience: {v, lambda, compute_mu(g, v, lambda)}.
HostSpec host_for(const LoopedGraph& g, int v, long long lambda);

} // namespace loopdec

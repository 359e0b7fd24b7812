#pragma once
#include <map>
#include <vector>

#include "loopdec/decomposition.hpp"

namespace loopdec {

// Pairwise balanced design: every pair of points lies in exactly one block.
struct Pbd {
    int v = 0;
    std::vector<std::vector<int>> blocks;
};

struct PbdParams {
    long long alpha = 0; // gcd { k - 1 : k in K }
    long long beta = 0;  // gcd { k (k - 1) : k in K }
};

PbdParams pbd_parameters(const std::vector<int>& K); // error EmptyK

struct PairDefect {
    int u = 0, v = 0;
    long long got = 0; // coverage count, want exactly 1
};

struct PbdReport {
    bool pass = false;
    std::vector<PairDefect> defects;
};

// Exact pair-coverage tally (structural problems throw MalformedInput).
PbdReport verify_pbd(const Pbd& p);

// Built-in fixtures, each validated by verify_pbd on construction.
Pbd pbd_single_block(int v);
Pbd pbd_fano();
Pbd pbd_triple_9();

// Pastes a decomposition of K_k^[mu(k); lambda] into every PBD block of size
// k through the order-preserving bijection onto the block's points.  All
// parts must share the same block graph and lambda and verify against their
// own hosts; the per-vertex loop sums must reproduce mu(v).  The composite is
// verified before it is returned.
Decomposition compose(const Pbd& p, const std::map<int, Decomposition>& parts);

} // namespace loopdec

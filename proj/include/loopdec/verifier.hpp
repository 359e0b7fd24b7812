#pragma once
#include <string>
#include <vector>

#include "loopdec/decomposition.hpp"

namespace loopdec {

// All verifiers tally the raw blocks from scratch; they share no counting
// code with any of the constructors they are used to check.

struct EdgeDefect {
    int u = 0, v = 0;
    long long got = 0, want = 0;
};

struct LoopDefect {
    int vertex = 0, color = 0;
    long long got = 0, want = 0;
};

struct VerifyReport {
    bool pass = false;
    std::vector<EdgeDefect> edge_defects;
    std::vector<LoopDefect> loop_defects;
};

// Signed tallies: every host pair must be covered exactly lambda times and
// every (vertex, color) must accumulate exactly mu[color] loops.  Structural
// problems (wrong map length, out-of-range or repeated vertices, mu of the
// wrong length) throw MalformedBlock.
VerifyReport verify_decomposition(const Decomposition& d);

struct BalanceReport {
    bool pass = false;
    std::vector<long long> replication; // blocks through each host vertex
};

// Constant replication.  Rejects signed input (any coefficient != +1).
BalanceReport verify_balanced(const Decomposition& d);

struct ClassBalanceReport {
    bool pass = false;
    // counts[class][host vertex]: appearances of the vertex in a role from
    // that class.  Classes are ascending degrees / orbits by least element.
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<long long>> counts;
};

// r_d(u) independent of u for every degree class d of the block graph.
ClassBalanceReport verify_degree_balanced(const Decomposition& d);

// r_a(u) independent of u for every vertex orbit a of the block graph with
// loops deleted.
ClassBalanceReport verify_orbit_balanced(const Decomposition& d);

struct ColoringReport {
    bool pass = false;
    std::vector<std::string> defects;
};

// (s, p)-equitable block coloring: colors[k] in 1..s per block; every host
// vertex must see exactly p distinct colors among its blocks, with block
// counts of any two seen colors differing by at most 1.  A vertex lying in
// fewer than p blocks therefore fails; vertices missing from all blocks are
// reported too.
ColoringReport verify_equitable_coloring(const Decomposition& d,
                                         const std::vector<int>& colors,
                                         int s, int p);

// order is a permutation of block indices; consecutive blocks (cyclically)
// must satisfy f_{H_k}(t_vertex) == f_{H_{k+1}}(s_vertex).
bool verify_block_ordering(const Decomposition& d, const std::vector<int>& order,
                           int s_vertex, int t_vertex);

} // namespace loopdec

#pragma once
#include <vector>

#include "loopdec/graph.hpp"

namespace loopdec {

// Host K_v^[mu; lambda]: lambda copies of every pair edge plus mu[i] loops of
// color i at every vertex.
struct HostSpec {
    int v = 0;
    long long lambda = 1;
    std::vector<long long> mu;

    bool operator==(const HostSpec&) const = default;
};

// One placed copy of the block graph: map[g] is the host vertex playing the
// role of block-graph vertex g.  sign is the integer coefficient of the copy
// (always +1 in honest decompositions, any nonzero integer in signed ones).
struct SignedBlock {
    std::vector<int> map;
    long long sign = 1;

    bool operator==(const SignedBlock&) const = default;
};

struct Decomposition {
    LoopedGraph graph;
    HostSpec host;
    std::vector<SignedBlock> blocks;
};

} // namespace loopdec

#pragma once
#include <vector>

#include "loopdec/decomposition.hpp"
#include "loopdec/field.hpp"
#include "loopdec/graph.hpp"

namespace loopdec {

// A placement of the block graph's vertices into F_q whose m edge differences
// (taken up to sign) land in pairwise distinct cosets of the index-m subgroup.
struct BaseBlock {
    LoopedGraph graph;
    long long q = 0;
    std::vector<int> placement; // field encodings, one per graph vertex
};

// Throws unless the placement is injective and the edge differences hit m
// pairwise distinct cosets.
void validate_base_block(const Field& f, const BaseBlock& b);

// Backtracking search for a base block.  Deterministic for a fixed seed; the
// seed shuffles candidate orders.  Errors: SearchExhausted, Timeout.
BaseBlock find_base_block(const LoopedGraph& g, const Field& f,
                          unsigned long long seed = 0,
                          long long timeout_ms = 10000);

// lambda copies of { t*B + a : t in the {1,-1}-transversal of C_0, a in F_q },
// giving lambda*q*(q-1)/(2m) blocks, all with coefficient +1.
Decomposition develop(const Field& f, const BaseBlock& base, long long lambda);

// find_base_block + develop + full verification of the result.
Decomposition construct_cyclotomic(const LoopedGraph& g, long long q,
                                   long long lambda,
                                   unsigned long long seed = 0,
                                   long long timeout_ms = 10000);

} // namespace loopdec

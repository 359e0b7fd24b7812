#pragma once
#include <utility>
#include <vector>

#include "loopdec/errors.hpp"

namespace loopdec {

// Simple graph on vertices 0..n-1 together with per-vertex loop
// multiplicities in c loop colors.  Edges are stored sorted, each with
// u < v; loops[u][i] is the number of loops of color i at vertex u.
struct LoopedGraph {
    int n = 0;
    int c = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> loops;

    // Validates and canonicalizes (sorts the edge list).  Rejects self-pairs,
    // duplicate edges, out-of-range endpoints, negative multiplicities and a
    // loop matrix of the wrong shape.
    static LoopedGraph create(int n, int c,
                              std::vector<std::pair<int, int>> edges,
                              std::vector<std::vector<int>> loops = {});

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    std::vector<long long> loop_totals() const; // l_i = sum_u loops[u][i]
    bool loopless() const;

    bool operator==(const LoopedGraph&) const = default;
};

struct GraphInvariants {
    int n = 0;
    int m = 0;
    std::vector<long long> loop_totals;
    int degree_gcd = 0; // 0 when the graph has no edges
};

GraphInvariants graph_invariants(const LoopedGraph& g);

// Row u is (d_u, e_{u,1}, ..., e_{u,c}).
std::vector<std::vector<long long>> degree_loop_vectors(const LoopedGraph& g);

// Vertex orbits of the automorphism group, each orbit sorted, orbits ordered
// by least element.  With respect_loops, automorphisms must also preserve
// the loop multiplicity of every color at every vertex.  Brute force with
// degree/loop-partition pruning; refuses n > vertex_bound.
std::vector<std::vector<int>> automorphism_orbits(const LoopedGraph& g,
                                                  bool respect_loops,
                                                  int vertex_bound = 10);

// Vertices grouped by degree, ascending degree.
std::vector<std::vector<int>> degree_classes(const LoopedGraph& g);

} // namespace loopdec

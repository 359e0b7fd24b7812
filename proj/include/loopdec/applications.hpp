#pragma once
#include <utility>
#include <vector>

#include "loopdec/decomposition.hpp"
#include "loopdec/graph.hpp"

namespace loopdec {

// One loop per vertex, colored by the vertex's degree class (colors in
// ascending degree order).  h must be loopless.
LoopedGraph attach_degree_loops(const LoopedGraph& h);

// One loop per vertex, colored by the vertex's automorphism orbit (orbits
// ordered by least element).  h must be loopless.
LoopedGraph attach_orbit_loops(const LoopedGraph& h, int vertex_bound = 10);

// K_k with k seat colors: vertex u carries exactly one loop of color u.
// Requires k >= 2.
LoopedGraph seats_clique(int k);

// s vertex-disjoint copies of loopless g; copy i occupies vertices
// [i*n, (i+1)*n) and every one of its vertices carries one loop of color i.
LoopedGraph build_equitable_union(const LoopedGraph& g, int s);

struct ColoredDesign {
    Decomposition design; // blocks are copies of the loopless base graph
    std::vector<int> colors; // 1..s per block
    int s = 0;
};

// Splits a decomposition whose block graph is build_equitable_union(base, s)
// into an s-equitably colored base-graph design: every union block yields s
// blocks, the copy-i restriction getting color i+1.  The output coloring is
// exactly balanced (equal counts at every vertex, not merely within 1).
ColoredDesign extract_coloring(const Decomposition& d);

// Cyclic block ordering with f_{H_k}(t_vertex) = f_{H_{k+1}}(s_vertex),
// for a block graph carrying exactly one color-0 loop at s_vertex and one
// color-1 loop at t_vertex and nothing else.  Errors: ImbalancedArcs,
// DisconnectedArcDigraph.
std::vector<int> order_blocks(const Decomposition& d, int s_vertex, int t_vertex);

// Eulerian circuit on a directed multigraph given as an arc list; returns the
// arc indices in circuit order (order_blocks uses one arc per block).
std::vector<int> eulerian_circuit(int vertex_count,
                                  const std::vector<std::pair<int, int>>& arcs);

} // namespace loopdec

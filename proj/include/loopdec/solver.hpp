#pragma once
#include <utility>
#include <vector>

#include "loopdec/decomposition.hpp"
#include "loopdec/graph.hpp"

namespace loopdec {

// All injective embeddings of g into {0..v-1}, one representative per
// distinct loop-decorated copy (two embeddings of the same copy differ by a
// loop-respecting automorphism of g and are deduplicated by their image).
// Representatives are the lexicographically least maps, in lexicographic
// order.  Refuses v > vertex_bound.
std::vector<std::vector<int>> enumerate_blocks(const LoopedGraph& g, int v,
                                               int vertex_bound = 10);

// One row per host pair (lexicographic), then one row per (vertex, color).
// Column j holds the sparse (row, coefficient) entries of embedding j.
struct LinearSystem {
    int v = 0;
    int c = 0;
    std::vector<std::pair<int, int>> pair_rows;
    std::vector<long long> rhs;
    std::vector<std::vector<std::pair<int, long long>>> columns;

    int rows() const { return static_cast<int>(rhs.size()); }
    int row_of_pair(int a, int b) const;
    int row_of_loop(int vertex, int color) const;
    std::string row_label(int r) const;
};

LinearSystem build_system(const LoopedGraph& g,
                          const std::vector<std::vector<int>>& embeddings,
                          int v, long long lambda,
                          const std::vector<long long>& mu);

// Exact integer solve of the coverage system over signed block coefficients.
// Admissibility is required (error Inconsistent with the report attached);
// an admissible but unsolvable system also reports Inconsistent, naming the
// row where reduction got stuck.  seed != 0 shuffles the column order to
// randomize which solution of the family is returned; the result is
// re-verified before it is returned either way.
Decomposition solve_signed(const LoopedGraph& g, int v, long long lambda,
                           unsigned long long seed = 0, int vertex_bound = 10);

// Depth-first search for an honest (all +1) decomposition, covering the
// lexicographically first open host pair at each node.  budget_nodes bounds
// the search-tree size (error NotFoundWithinBudget).
Decomposition solve_nonnegative(const LoopedGraph& g, int v, long long lambda,
                                long long budget_nodes = 10'000'000,
                                int vertex_bound = 10);

} // namespace loopdec

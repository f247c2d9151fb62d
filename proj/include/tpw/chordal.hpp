#pragma once

#include <optional>
#include <vector>

#include "tpw/graph.hpp"

namespace tpw {

/// A permutation of the vertices. For a perfect elimination order, the
/// neighbours of each vertex that come later in the order form a clique.
struct EliminationOrder {
  std::vector<int> order;
};

struct ChordalityResult {
  bool chordal = false;
  std::optional<EliminationOrder> peo;  // set iff chordal
  std::vector<int> witness_cycle;       // chordless cycle of length >= 4 iff !chordal
};

/// Maximum cardinality search, ties broken by smallest index. Returns the
/// visit order; its reverse is a PEO exactly when g is chordal.
std::vector<int> maximum_cardinality_search(const Graph& g);

/// Checks the PEO property directly. On failure returns (pivot, x, y) where x
/// and y are non-adjacent later neighbours of pivot.
struct PeoViolation {
  int pivot;
  int x;
  int y;
};
std::optional<PeoViolation> find_peo_violation(const Graph& g, const EliminationOrder& peo);

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& peo);

ChordalityResult is_chordal(const Graph& g);

/// Vertices whose neighbourhood induces a clique, ascending.
VertexSet simplicial_vertices(const Graph& g);

/// True iff `cycle` lists distinct vertices forming a cycle of length >= 4
/// with no chord.
bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle);

}  // namespace tpw

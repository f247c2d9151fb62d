#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tpw/chordal.hpp"
#include "tpw/graph.hpp"

namespace tpw {

/// Bags plus the edges of a forest over bag indices.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;

  /// Largest bag size minus one; -1 when there are no bags.
  int width() const;
};

/// Result of checking the decomposition axioms. `axiom` names the first
/// violated condition; `witness` holds the offending vertices or bags.
struct TdVerdict {
  bool ok = true;
  std::string axiom;
  std::string detail;
  std::vector<int> witness;

  explicit operator bool() const { return ok; }
};

/// Checks, in order: the bag graph is a forest with valid bag indices and
/// bags hold valid vertices; every vertex is covered; every edge is covered;
/// the bags containing each vertex induce a connected subtree.
TdVerdict verify_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Decomposition induced by eliminating vertices in `order`: each vertex
/// contributes itself plus its later neighbours in the filled graph. Subset
/// bags are contracted away.
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order);

/// Clique tree of a chordal graph. Throws InputError if `peo` is not a PEO.
TreeDecomposition clique_tree_from_peo(const Graph& g, const EliminationOrder& peo);

/// Contracts every tree edge whose one bag is a subset of the other.
TreeDecomposition compress_decomposition(TreeDecomposition td);

/// Joins the components of the bag forest into a single tree (no-op for
/// trees). The result is still a valid decomposition.
TreeDecomposition connect_decomposition(TreeDecomposition td);

/// Restricts a decomposition of some graph to the vertices `keep`, renaming
/// vertex v to local[v] (every kept vertex must have local[v] >= 0, others
/// -1). Empty bags are contracted into a neighbour.
TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const std::vector<int>& local);

/// Hard vertex cap for the exponential treewidth dynamic program.
inline constexpr int kTreewidthExactMaxN = 16;

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

/// Exact treewidth. Chordal graphs of any size go through the clique tree;
/// other graphs use the subset dynamic program over elimination orders and
/// throw CapacityError above kTreewidthExactMaxN vertices.
TreewidthResult treewidth_exact(const Graph& g);

/// The subset dynamic program alone, whatever the graph; CapacityError above
/// kTreewidthExactMaxN vertices.
TreewidthResult treewidth_dp(const Graph& g);

/// Valid decomposition with no optimality guarantee: clique tree for chordal
/// graphs, min-fill elimination (ties to the smallest index) otherwise.
TreeDecomposition treewidth_heuristic(const Graph& g);

/// Elimination order chosen by the min-fill rule.
std::vector<int> min_fill_order(const Graph& g);

/// Degeneracy of g, a lower bound on its treewidth.
int degeneracy(const Graph& g);

/// Two edge-disjoint subgraphs covering g that meet in `y`.
struct SeparatorResult {
  VertexSet y;
  VertexSet v1;
  VertexSet v2;
  std::vector<std::uint8_t> edge_side;  // 1 or 2, aligned with g.edges()
};

/// Balanced separator relative to `s`: |y| <= width(td)+1, sides edge-disjoint
/// and covering g, and |s - v_i| <= (2/3)|s - y| for both sides.
/// Throws InputError when td does not verify or s is not a vertex subset.
SeparatorResult balanced_separator(const Graph& g, const TreeDecomposition& td, const VertexSet& s);

/// Independent postcondition check for a separator; empty string when every
/// condition holds, otherwise a description of the first failure.
std::string check_separator(const Graph& g, int k, const VertexSet& s, const SeparatorResult& sep);

}  // namespace tpw

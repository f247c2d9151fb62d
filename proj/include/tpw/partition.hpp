#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpw/graph.hpp"

namespace tpw {

/// Partition of the vertex set into non-empty bags. Bag ids are dense,
/// 0..bag_count()-1. Whether the quotient is a forest is checked separately
/// by verify_tree_partition.
class TreePartition {
 public:
  TreePartition() = default;

  /// From a vertex -> bag id map. Ids must be dense and every bag non-empty.
  static TreePartition from_assignment(std::vector<int> bag_of);
  /// From explicit bags over vertices 0..n-1; bag i keeps id i.
  static TreePartition from_bags(int n, const std::vector<VertexSet>& bags);

  int vertex_count() const { return static_cast<int>(bag_of_.size()); }
  int bag_count() const { return static_cast<int>(bags_.size()); }
  int bag_of(int v) const { return bag_of_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& assignment() const { return bag_of_; }
  const std::vector<VertexSet>& bags() const { return bags_; }

  /// Largest bag size; 0 for the empty partition.
  int width() const;

  bool operator==(const TreePartition&) const = default;

 private:
  std::vector<int> bag_of_;
  std::vector<VertexSet> bags_;
};

/// Bags as vertices, adjacent iff some edge crosses between them.
/// Throws InputError if p does not partition V(g).
Graph quotient_graph(const Graph& g, const TreePartition& p);

struct TpVerdict {
  bool ok = true;
  int width = 0;
  std::string detail;
  std::vector<int> quotient_cycle;  // bag ids, when the quotient has a cycle

  explicit operator bool() const { return ok; }
};

TpVerdict verify_tree_partition(const Graph& g, const TreePartition& p);

/// Splits every bag into the connected components of the subgraph it
/// induces. Requires chordal g (the result is then again a tree-partition).
TreePartition refine_connected(const Graph& g, const TreePartition& p);

/// True iff for every bag B either B = {v} with v in s, or G[B - s] is
/// connected and non-empty.
bool satisfies_simplicial_normal_form(const Graph& g, const TreePartition& p, const VertexSet& s);

/// BFS layering from `root` (per component), a cheap tree-partition.
TreePartition bfs_layering(const Graph& g, int root);

struct ExactTpwOptions {
  int max_n = 12;
  /// 0 means unlimited. Counted in search nodes, so results are reproducible.
  std::uint64_t node_limit = 0;
  /// 0 means unlimited. Wall-clock; results may then vary between runs.
  std::uint64_t time_budget_ms = 0;
  /// Enumerate only partitions whose bags induce connected subgraphs. Applied
  /// only when g is chordal, where it is sound.
  bool chordal_pruning = false;
};

struct ExactTpwResult {
  bool complete = false;
  /// Certified lower bound; equals the optimum when complete.
  int lower_bound = 0;
  /// Best tree-partition found; its width is the optimum when complete.
  TreePartition witness;
  std::uint64_t nodes = 0;

  int upper_bound() const { return witness.width(); }
};

/// Minimum tree-partition width of a connected graph by iterative deepening
/// over restricted-growth assignments. Graphs above opts.max_n are only
/// searched under a node or time budget; without one they raise CapacityError.
/// Disconnected input raises InputError.
ExactTpwResult exact_tpw(const Graph& g, const ExactTpwOptions& opts = {});

/// Seese's bound: 2 tpw >= tw + 1.
inline int seese_lower(int tw) { return (tw + 2) / 2; }

}  // namespace tpw

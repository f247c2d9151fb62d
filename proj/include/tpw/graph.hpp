#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tpw {

/// Sorted list of distinct vertex indices.
using VertexSet = std::vector<int>;

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
///
/// Edges are stored normalised (u < v) and sorted; adjacency lists are sorted
/// ascending, so `adjacent` is a binary search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list, dropping duplicate edges.
  /// Throws InputError on out-of-range endpoints or self-loops.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int u, int v) const;

  const std::vector<Edge>& edges() const { return edges_; }

  /// Position of edge {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(int u, int v) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && adj_.size() == other.adj_.size(); }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

int max_degree(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// A subgraph together with the index maps back to its parent graph.
struct Subgraph {
  Graph graph;
  std::vector<int> to_parent;    // local index -> parent index
  std::vector<int> from_parent;  // parent index -> local index, or -1
};

/// G[s]. Local vertex i corresponds to the i-th smallest member of s.
Subgraph induced_subgraph(const Graph& g, std::span<const int> s);

/// Subgraph on vertex set s (sorted, distinct) keeping only the listed edges,
/// which must have both endpoints in s. Edges are given in parent indices.
Subgraph edge_subgraph(const Graph& g, std::span<const int> s, std::span<const Edge> edges);

/// True iff every pair of distinct vertices in s is adjacent.
bool is_clique(const Graph& g, std::span<const int> s);

/// Normalises a vertex list into a VertexSet (sorted, deduplicated).
VertexSet make_vertex_set(std::vector<int> vs);

}  // namespace tpw

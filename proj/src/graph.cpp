#include "tpw/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "tpw/errors.hpp"

namespace tpw {

Graph::Graph(int n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
  Edge key = u < v ? Edge{u, v} : Edge{v, u};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

Subgraph make_index_maps(const Graph& g, std::span<const int> s) {
  Subgraph sub;
  sub.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  sub.to_parent.assign(s.begin(), s.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    int v = sub.to_parent[i];
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    if (sub.from_parent[static_cast<std::size_t>(v)] != -1) throw InputError("vertex " + std::to_string(v) + " listed twice");
    sub.from_parent[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return sub;
}

}  // namespace

Subgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  Subgraph sub = make_index_maps(g, s);
  std::vector<Edge> local;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    int v = sub.to_parent[i];
    for (int w : g.neighbors(v)) {
      int j = sub.from_parent[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) local.push_back({static_cast<int>(i), j});
    }
  }
  sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), local);
  return sub;
}

Subgraph edge_subgraph(const Graph& g, std::span<const int> s, std::span<const Edge> edges) {
  Subgraph sub = make_index_maps(g, s);
  std::vector<Edge> local;
  local.reserve(edges.size());
  for (const Edge& e : edges) {
    int a = sub.from_parent[static_cast<std::size_t>(e.u)];
    int b = sub.from_parent[static_cast<std::size_t>(e.v)];
    if (a < 0 || b < 0) throw InputError("edge endpoint outside the subgraph vertex set");
    local.push_back({a, b});
  }
  sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), local);
  return sub;
}

bool is_clique(const Graph& g, std::span<const int> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

VertexSet make_vertex_set(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace tpw

#include "tpw/partition.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "tpw/chordal.hpp"
#include "tpw/errors.hpp"
#include "union_find.hpp"

namespace tpw {

TreePartition TreePartition::from_assignment(std::vector<int> bag_of) {
  TreePartition p;
  int count = 0;
  for (int b : bag_of) {
    if (b < 0) throw InputError("negative bag id");
    count = std::max(count, b + 1);
  }
  p.bags_.resize(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < bag_of.size(); ++v) p.bags_[static_cast<std::size_t>(bag_of[v])].push_back(static_cast<int>(v));
  for (std::size_t b = 0; b < p.bags_.size(); ++b)
    if (p.bags_[b].empty()) throw InputError("bag " + std::to_string(b) + " is empty");
  p.bag_of_ = std::move(bag_of);
  return p;
}

TreePartition TreePartition::from_bags(int n, const std::vector<VertexSet>& bags) {
  std::vector<int> bag_of(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < bags.size(); ++b) {
    if (bags[b].empty()) throw InputError("bag " + std::to_string(b) + " is empty");
    for (int v : bags[b]) {
      if (v < 0 || v >= n) throw InputError("bag " + std::to_string(b) + " holds unknown vertex " + std::to_string(v));
      if (bag_of[static_cast<std::size_t>(v)] != -1) throw InputError("vertex " + std::to_string(v) + " is in two bags");
      bag_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (bag_of[static_cast<std::size_t>(v)] < 0) throw InputError("vertex " + std::to_string(v) + " is in no bag");
  return from_assignment(std::move(bag_of));
}

int TreePartition::width() const {
  int w = 0;
  for (const auto& b : bags_) w = std::max(w, static_cast<int>(b.size()));
  return w;
}

Graph quotient_graph(const Graph& g, const TreePartition& p) {
  if (p.vertex_count() != g.vertex_count())
    throw InputError("partition covers " + std::to_string(p.vertex_count()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  std::vector<Edge> q;
  for (const Edge& e : g.edges()) {
    int a = p.bag_of(e.u);
    int b = p.bag_of(e.v);
    if (a != b) q.push_back({a, b});
  }
  return Graph::from_edges(p.bag_count(), q);
}

TpVerdict verify_tree_partition(const Graph& g, const TreePartition& p) {
  TpVerdict verdict;
  if (p.vertex_count() != g.vertex_count()) {
    verdict.ok = false;
    verdict.detail = "partition covers " + std::to_string(p.vertex_count()) + " vertices, graph has " +
                     std::to_string(g.vertex_count());
    return verdict;
  }
  Graph q = quotient_graph(g, p);
  UnionFind uf(q.vertex_count());
  std::vector<std::vector<int>> forest(static_cast<std::size_t>(q.vertex_count()));
  for (const Edge& e : q.edges()) {
    if (uf.unite(e.u, e.v)) {
      forest[static_cast<std::size_t>(e.u)].push_back(e.v);
      forest[static_cast<std::size_t>(e.v)].push_back(e.u);
      continue;
    }
    std::vector<int> prev(forest.size(), -2);
    std::queue<int> bfs;
    bfs.push(e.u);
    prev[static_cast<std::size_t>(e.u)] = -1;
    while (!bfs.empty()) {
      int b = bfs.front();
      bfs.pop();
      for (int c : forest[static_cast<std::size_t>(b)])
        if (prev[static_cast<std::size_t>(c)] == -2) {
          prev[static_cast<std::size_t>(c)] = b;
          bfs.push(c);
        }
    }
    for (int b = e.v; b != -1; b = prev[static_cast<std::size_t>(b)]) verdict.quotient_cycle.push_back(b);
    verdict.ok = false;
    verdict.detail = "quotient graph has a cycle through " + std::to_string(verdict.quotient_cycle.size()) + " bags";
    return verdict;
  }
  verdict.width = p.width();
  return verdict;
}

namespace {

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& members) {
  std::vector<char> inside(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : members) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<VertexSet> out;
  for (int r : members) {
    if (inside[static_cast<std::size_t>(r)] != 1) continue;
    VertexSet comp;
    std::vector<int> stack{r};
    inside[static_cast<std::size_t>(r)] = 2;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (inside[static_cast<std::size_t>(w)] == 1) {
          inside[static_cast<std::size_t>(w)] = 2;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

TreePartition refine_connected(const Graph& g, const TreePartition& p) {
  if (!is_chordal(g).chordal) throw InputError("connected refinement is only a tree-partition for chordal graphs");
  if (auto v = verify_tree_partition(g, p); !v) throw InputError("input is not a tree-partition: " + v.detail);
  std::vector<VertexSet> bags;
  for (const auto& bag : p.bags())
    for (auto& comp : components_within(g, bag)) bags.push_back(std::move(comp));
  return TreePartition::from_bags(g.vertex_count(), bags);
}

bool satisfies_simplicial_normal_form(const Graph& g, const TreePartition& p, const VertexSet& s) {
  std::vector<char> in_s(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) in_s[static_cast<std::size_t>(v)] = 1;
  for (const auto& bag : p.bags()) {
    VertexSet rest;
    for (int v : bag)
      if (!in_s[static_cast<std::size_t>(v)]) rest.push_back(v);
    if (rest.empty()) {
      if (bag.size() != 1) return false;
      continue;
    }
    if (components_within(g, rest).size() != 1) return false;
  }
  return true;
}

TreePartition bfs_layering(const Graph& g, int root) {
  const int n = g.vertex_count();
  std::vector<int> bag_of(static_cast<std::size_t>(n), -1);
  int next_bag = 0;
  auto layer_from = [&](int r) {
    std::vector<int> layer{r};
    bag_of[static_cast<std::size_t>(r)] = next_bag++;
    while (!layer.empty()) {
      std::vector<int> next;
      for (int v : layer)
        for (int w : g.neighbors(v))
          if (bag_of[static_cast<std::size_t>(w)] < 0) {
            bag_of[static_cast<std::size_t>(w)] = next_bag;
            next.push_back(w);
          }
      if (!next.empty()) ++next_bag;
      layer = std::move(next);
    }
  };
  if (n > 0) layer_from(root);
  for (int v = 0; v < n; ++v)
    if (bag_of[static_cast<std::size_t>(v)] < 0) layer_from(v);
  return TreePartition::from_assignment(std::move(bag_of));
}

}  // namespace tpw

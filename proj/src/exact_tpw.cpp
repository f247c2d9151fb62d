#include <algorithm>
#include <chrono>
#include <queue>
#include <string>

#include "tpw/chordal.hpp"
#include "tpw/decomposition.hpp"
#include "tpw/errors.hpp"
#include "tpw/partition.hpp"
#include "union_find.hpp"

namespace tpw {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first search over restricted-growth assignments in BFS order, with
// the quotient kept acyclic by a rollback union-find over bag ids.
class WidthSearch {
 public:
  WidthSearch(const Graph& g, bool connected_bags, std::uint64_t node_limit, std::uint64_t* nodes,
              std::optional<Clock::time_point> deadline)
      : g_(g),
        n_(g.vertex_count()),
        connected_bags_(connected_bags),
        node_limit_(node_limit),
        nodes_(nodes),
        deadline_(deadline),
        uf_(n_) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order_.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
    }
  }

  enum class Outcome { kFound, kRefuted, kAborted };

  Outcome run(int cap) {
    cap_ = cap;
    bag_.assign(static_cast<std::size_t>(n_), -1);
    size_.assign(static_cast<std::size_t>(n_), 0);
    members_.assign(static_cast<std::size_t>(n_), {});
    crossing_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    used_ = 0;
    aborted_ = false;
    uf_.rollback(0);
    bool found = descend(0);
    if (found) return Outcome::kFound;
    return aborted_ ? Outcome::kAborted : Outcome::kRefuted;
  }

  TreePartition witness() const { return TreePartition::from_assignment(solution_); }

 private:
  int& crossing(int a, int b) { return crossing_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)]; }

  bool out_of_budget() {
    ++*nodes_;
    if (node_limit_ && *nodes_ > node_limit_) return true;
    if (deadline_ && (*nodes_ & 1023) == 0 && Clock::now() > *deadline_) return true;
    return false;
  }

  // Members of `b` must still be linkable through unassigned vertices.
  bool bag_can_connect(int b, int depth) {
    const auto& mem = members_[static_cast<std::size_t>(b)];
    if (mem.size() <= 1) return true;
    std::vector<char> ok(static_cast<std::size_t>(n_), 0);
    for (int v : mem) ok[static_cast<std::size_t>(v)] = 1;
    for (int i = depth + 1; i < n_; ++i) ok[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = 1;
    std::vector<int> stack{mem.front()};
    ok[static_cast<std::size_t>(mem.front())] = 2;
    std::size_t reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (bag_[static_cast<std::size_t>(v)] == b) ++reached;
      for (int w : g_.neighbors(v))
        if (ok[static_cast<std::size_t>(w)] == 1) {
          ok[static_cast<std::size_t>(w)] = 2;
          stack.push_back(w);
        }
    }
    return reached == mem.size();
  }

  bool descend(int depth) {
    if (out_of_budget()) {
      aborted_ = true;
      return false;
    }
    if (depth == n_) {
      solution_ = bag_;
      return true;
    }
    const int v = order_[static_cast<std::size_t>(depth)];
    std::vector<int> near;
    for (int w : g_.neighbors(v))
      if (bag_[static_cast<std::size_t>(w)] >= 0) near.push_back(bag_[static_cast<std::size_t>(w)]);
    std::sort(near.begin(), near.end());
    near.erase(std::unique(near.begin(), near.end()), near.end());

    std::vector<int> candidates = near;
    for (int b = 0; b < used_; ++b)
      if (!std::binary_search(near.begin(), near.end(), b)) candidates.push_back(b);
    if (used_ < n_) candidates.push_back(used_);

    for (int b : candidates) {
      if (size_[static_cast<std::size_t>(b)] >= cap_) continue;
      const std::size_t mark = uf_.checkpoint();
      bool acyclic = true;
      for (int c : near) {
        if (c == b || crossing(b, c) > 0) continue;
        if (!uf_.unite(b, c)) {
          acyclic = false;
          break;
        }
      }
      if (acyclic) {
        const int saved_used = used_;
        bag_[static_cast<std::size_t>(v)] = b;
        ++size_[static_cast<std::size_t>(b)];
        members_[static_cast<std::size_t>(b)].push_back(v);
        if (b == used_) ++used_;
        for (int w : g_.neighbors(v)) {
          int c = bag_[static_cast<std::size_t>(w)];
          if (w != v && c >= 0 && c != b) {
            ++crossing(b, c);
            ++crossing(c, b);
          }
        }
        bool viable = true;
        if (connected_bags_) {
          viable = bag_can_connect(b, depth);
          for (std::size_t i = 0; viable && i < near.size(); ++i)
            if (near[i] != b) viable = bag_can_connect(near[i], depth);
        }
        if (viable && descend(depth + 1)) return true;
        for (int w : g_.neighbors(v)) {
          int c = bag_[static_cast<std::size_t>(w)];
          if (w != v && c >= 0 && c != b) {
            --crossing(b, c);
            --crossing(c, b);
          }
        }
        members_[static_cast<std::size_t>(b)].pop_back();
        --size_[static_cast<std::size_t>(b)];
        bag_[static_cast<std::size_t>(v)] = -1;
        used_ = saved_used;
      }
      uf_.rollback(mark);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  bool connected_bags_;
  std::uint64_t node_limit_;
  std::uint64_t* nodes_;
  std::optional<Clock::time_point> deadline_;
  UnionFind uf_;
  std::vector<int> order_;
  int cap_ = 0;
  std::vector<int> bag_;
  std::vector<int> size_;
  std::vector<std::vector<int>> members_;
  std::vector<int> crossing_;
  int used_ = 0;
  bool aborted_ = false;
  std::vector<int> solution_;
};

int treewidth_lower_bound(const Graph& g) {
  try {
    return treewidth_exact(g).width;
  } catch (const CapacityError&) {
    return degeneracy(g);
  }
}

}  // namespace

ExactTpwResult exact_tpw(const Graph& g, const ExactTpwOptions& opts) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw InputError("exact tree-partition-width needs a connected graph; solve each component");
  const bool budgeted = opts.node_limit > 0 || opts.time_budget_ms > 0;
  if (n > opts.max_n && !budgeted)
    throw CapacityError("graph has " + std::to_string(n) + " vertices, above the exact search limit of " +
                        std::to_string(opts.max_n) + "; supply a node or time budget for a partial answer");

  ExactTpwResult res;
  if (n == 0) {
    res.complete = true;
    return res;
  }
  TreePartition best = bfs_layering(g, 0);
  for (int r = 1; r < n; ++r) {
    TreePartition cand = bfs_layering(g, r);
    if (cand.width() < best.width()) best = std::move(cand);
  }
  res.witness = best;
  res.lower_bound = std::max(1, seese_lower(treewidth_lower_bound(g)));

  std::optional<Clock::time_point> deadline;
  if (opts.time_budget_ms > 0) deadline = Clock::now() + std::chrono::milliseconds(opts.time_budget_ms);
  const bool connected_bags = opts.chordal_pruning && is_chordal(g).chordal;
  WidthSearch search(g, connected_bags, opts.node_limit, &res.nodes, deadline);

  for (int cap = res.lower_bound; cap < res.witness.width(); ++cap) {
    auto outcome = search.run(cap);
    if (outcome == WidthSearch::Outcome::kAborted) {
      res.lower_bound = cap;
      return res;
    }
    if (outcome == WidthSearch::Outcome::kFound) {
      res.witness = search.witness();
      res.lower_bound = cap;
      res.complete = true;
      return res;
    }
  }
  res.lower_bound = res.witness.width();
  res.complete = true;
  return res;
}

}  // namespace tpw

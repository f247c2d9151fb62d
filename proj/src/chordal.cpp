#include "tpw/chordal.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "tpw/errors.hpp"

namespace tpw {

std::vector<int> maximum_cardinality_search(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    }
    done[static_cast<std::size_t>(pick)] = 1;
    visit.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!done[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
  }
  return visit;
}

namespace {

std::vector<int> positions(const Graph& g, const EliminationOrder& peo) {
  const int n = g.vertex_count();
  if (static_cast<int>(peo.order.size()) != n) throw InputError("elimination order has wrong length");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < peo.order.size(); ++i) {
    int v = peo.order[i];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
      throw InputError("elimination order is not a permutation of the vertices");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return pos;
}

// Shortest x-y path avoiding N[pivot] - {x, y}; closing it through pivot
// yields a chordless cycle.
std::vector<int> cycle_through(const Graph& g, int pivot, int x, int y) {
  const int n = g.vertex_count();
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  blocked[static_cast<std::size_t>(pivot)] = 1;
  for (int w : g.neighbors(pivot)) blocked[static_cast<std::size_t>(w)] = 1;
  blocked[static_cast<std::size_t>(x)] = 0;
  blocked[static_cast<std::size_t>(y)] = 0;
  std::vector<int> prev(static_cast<std::size_t>(n), -2);
  std::queue<int> q;
  q.push(x);
  prev[static_cast<std::size_t>(x)] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == y) break;
    for (int w : g.neighbors(v)) {
      if (blocked[static_cast<std::size_t>(w)] || prev[static_cast<std::size_t>(w)] != -2) continue;
      prev[static_cast<std::size_t>(w)] = v;
      q.push(w);
    }
  }
  if (prev[static_cast<std::size_t>(y)] == -2) return {};
  std::vector<int> path;
  for (int v = y; v != -1; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());  // x ... y
  std::vector<int> cycle;
  cycle.push_back(pivot);
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

std::vector<int> any_chordless_cycle(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        auto c = cycle_through(g, v, nb[i], nb[j]);
        if (!c.empty()) return c;
      }
  }
  return {};
}

}  // namespace

std::optional<PeoViolation> find_peo_violation(const Graph& g, const EliminationOrder& peo) {
  const auto pos = positions(g, peo);
  for (int v : peo.order) {
    int first = -1;
    for (int w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
          (first < 0 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(first)]))
        first = w;
    if (first < 0) continue;
    for (int w : g.neighbors(v)) {
      if (w == first || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)]) continue;
      if (!g.adjacent(first, w)) return PeoViolation{v, first, w};
    }
  }
  return std::nullopt;
}

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& peo) {
  try {
    return !find_peo_violation(g, peo).has_value();
  } catch (const InputError&) {
    return false;
  }
}

ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult res;
  auto visit = maximum_cardinality_search(g);
  EliminationOrder peo{std::vector<int>(visit.rbegin(), visit.rend())};
  auto bad = find_peo_violation(g, peo);
  if (!bad) {
    res.chordal = true;
    res.peo = std::move(peo);
    return res;
  }
  res.witness_cycle = cycle_through(g, bad->pivot, bad->x, bad->y);
  if (res.witness_cycle.empty()) res.witness_cycle = any_chordless_cycle(g);
  if (!is_chordless_cycle(g, res.witness_cycle))
    throw ContractError("MCS rejected the graph but no chordless cycle was found");
  return res;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_clique(g, g.neighbors(v))) out.push_back(v);
  return out;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

}  // namespace tpw

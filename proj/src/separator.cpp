#include <algorithm>
#include <queue>
#include <string>

#include "tpw/decomposition.hpp"
#include "tpw/errors.hpp"

namespace tpw {

namespace {

struct Component {
  VertexSet vertices;
  int weight = 0;  // members of s
};

std::vector<Component> components_avoiding(const Graph& g, const std::vector<char>& removed,
                                           const std::vector<char>& in_s) {
  const int n = g.vertex_count();
  std::vector<char> seen(removed);
  std::vector<Component> out;
  for (int r = 0; r < n; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    Component c;
    std::queue<int> q;
    q.push(r);
    seen[static_cast<std::size_t>(r)] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      c.vertices.push_back(v);
      c.weight += in_s[static_cast<std::size_t>(v)];
      for (int w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  return out;
}

void assign_edges(const Graph& g, SeparatorResult& res) {
  std::vector<char> side(static_cast<std::size_t>(g.vertex_count()), 0);  // 0 = in y
  for (int v : res.v1) side[static_cast<std::size_t>(v)] = 1;
  for (int v : res.v2) side[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)] ? 0 : 2;
  res.edge_side.clear();
  res.edge_side.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    int s = std::max(side[static_cast<std::size_t>(e.u)], side[static_cast<std::size_t>(e.v)]);
    res.edge_side.push_back(static_cast<std::uint8_t>(s == 0 ? 1 : s));
  }
}

// Bags on each side of the tree edge (t, u), seen from t.
std::vector<char> side_of(const std::vector<std::vector<int>>& tree, int t, int u) {
  std::vector<char> mark(tree.size(), 0);
  std::vector<int> stack{t};
  mark[static_cast<std::size_t>(t)] = 1;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    for (int c : tree[static_cast<std::size_t>(b)]) {
      if (mark[static_cast<std::size_t>(c)] || (b == t && c == u)) continue;
      mark[static_cast<std::size_t>(c)] = 1;
      stack.push_back(c);
    }
  }
  return mark;
}

}  // namespace

SeparatorResult balanced_separator(const Graph& g, const TreeDecomposition& td_in, const VertexSet& s) {
  if (auto verdict = verify_tree_decomposition(g, td_in); !verdict)
    throw InputError("tree decomposition does not verify (" + verdict.axiom + "): " + verdict.detail);
  const int n = g.vertex_count();
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) throw InputError("anchor vertex " + std::to_string(s[i]) + " is not in the graph");
    if (i > 0 && s[i - 1] >= s[i]) throw InputError("anchor set must be sorted and duplicate-free");
    in_s[static_cast<std::size_t>(s[i])] = 1;
  }

  SeparatorResult res;
  if (n == 0) return res;
  const TreeDecomposition td = connect_decomposition(td_in);
  const int nb = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(nb));
  for (auto [a, b] : td.tree_edges) {
    tree[static_cast<std::size_t>(a)].push_back(b);
    tree[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nbrs : tree) std::sort(nbrs.begin(), nbrs.end());
  std::vector<int> home(static_cast<std::size_t>(n), -1);
  for (int b = nb - 1; b >= 0; --b)
    for (int v : td.bags[static_cast<std::size_t>(b)]) home[static_cast<std::size_t>(v)] = b;

  int prev = -1;
  int cur = 0;
  for (;;) {
    const VertexSet& x = td.bags[static_cast<std::size_t>(cur)];
    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    int total = static_cast<int>(s.size());
    for (int v : x) {
      in_x[static_cast<std::size_t>(v)] = 1;
      total -= in_s[static_cast<std::size_t>(v)];
    }
    auto comps = components_avoiding(g, in_x, in_s);
    auto heavy = std::find_if(comps.begin(), comps.end(), [&](const Component& c) { return 2 * c.weight > total; });

    if (heavy == comps.end()) {
      // Every piece carries at most half, so greedy lighter-side filling keeps
      // both sides within two thirds.
      std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        return a.weight != b.weight ? a.weight > b.weight : a.vertices.front() < b.vertices.front();
      });
      VertexSet v1 = x;
      VertexSet v2 = x;
      int w1 = 0;
      int w2 = 0;
      for (const auto& c : comps) {
        if (w1 <= w2) {
          v1.insert(v1.end(), c.vertices.begin(), c.vertices.end());
          w1 += c.weight;
        } else {
          v2.insert(v2.end(), c.vertices.begin(), c.vertices.end());
          w2 += c.weight;
        }
      }
      res.y = x;
      res.v1 = make_vertex_set(std::move(v1));
      res.v2 = make_vertex_set(std::move(v2));
      assign_edges(g, res);
      return res;
    }

    // The heavy component lives in the branch towards the bag holding any of its vertices.
    const int target = home[static_cast<std::size_t>(heavy->vertices.front())];
    std::vector<int> up(static_cast<std::size_t>(nb), -2);
    std::queue<int> q;
    q.push(cur);
    up[static_cast<std::size_t>(cur)] = -1;
    while (!q.empty()) {
      int b = q.front();
      q.pop();
      for (int c : tree[static_cast<std::size_t>(b)])
        if (up[static_cast<std::size_t>(c)] == -2) {
          up[static_cast<std::size_t>(c)] = b;
          q.push(c);
        }
    }
    int next = target;
    while (up[static_cast<std::size_t>(next)] != cur) next = up[static_cast<std::size_t>(next)];

    if (next != prev) {
      prev = cur;
      cur = next;
      continue;
    }

    // The edge (prev, cur) points both ways: no bag on the walk is a centroid.
    // Split along the edge and move just enough anchor vertices of the
    // heavier side's end bag into the separator to restore the 2:1 balance.
    int t = prev;
    int u = cur;
    auto t_side = side_of(tree, t, u);
    std::vector<char> vert_t(static_cast<std::size_t>(n), 0);
    std::vector<char> vert_u(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < nb; ++b)
      for (int v : td.bags[static_cast<std::size_t>(b)])
        (t_side[static_cast<std::size_t>(b)] ? vert_t : vert_u)[static_cast<std::size_t>(v)] = 1;
    int p = 0;
    int qw = 0;
    for (int v : s) {
      bool both = vert_t[static_cast<std::size_t>(v)] && vert_u[static_cast<std::size_t>(v)];
      if (both) continue;
      (vert_t[static_cast<std::size_t>(v)] ? p : qw) += 1;
    }
    if (p < qw) {
      std::swap(t, u);
      std::swap(vert_t, vert_u);
      std::swap(p, qw);
    }
    const VertexSet& wt = td.bags[static_cast<std::size_t>(t)];
    int need = std::max(0, p - 2 * qw);
    VertexSet moved;
    for (int v : wt) {
      if (static_cast<int>(moved.size()) == need) break;
      if (in_s[static_cast<std::size_t>(v)] && !vert_u[static_cast<std::size_t>(v)]) moved.push_back(v);
    }
    if (static_cast<int>(moved.size()) < need) throw ContractError("separator edge split could not rebalance");

    VertexSet v1;
    VertexSet v2;
    VertexSet y;
    std::vector<char> in_moved(static_cast<std::size_t>(n), 0);
    for (int v : moved) in_moved[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v) {
      bool a = vert_t[static_cast<std::size_t>(v)];
      bool b = vert_u[static_cast<std::size_t>(v)] || in_moved[static_cast<std::size_t>(v)];
      if (a) v1.push_back(v);
      if (b) v2.push_back(v);
      if (a && b) y.push_back(v);
    }
    res.y = std::move(y);
    res.v1 = std::move(v1);
    res.v2 = std::move(v2);
    assign_edges(g, res);
    return res;
  }
}

std::string check_separator(const Graph& g, int k, const VertexSet& s, const SeparatorResult& sep) {
  const int n = g.vertex_count();
  if (static_cast<int>(sep.y.size()) > k + 1)
    return "separator has " + std::to_string(sep.y.size()) + " vertices, more than k+1 = " + std::to_string(k + 1);
  std::vector<int> mark(static_cast<std::size_t>(n), 0);
  for (int v : sep.v1) mark[static_cast<std::size_t>(v)] |= 1;
  for (int v : sep.v2) mark[static_cast<std::size_t>(v)] |= 2;
  std::vector<char> in_y(static_cast<std::size_t>(n), 0);
  for (int v : sep.y) in_y[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < n; ++v) {
    if (mark[static_cast<std::size_t>(v)] == 0) return "vertex " + std::to_string(v) + " is on neither side";
    if ((mark[static_cast<std::size_t>(v)] == 3) != static_cast<bool>(in_y[static_cast<std::size_t>(v)]))
      return "side intersection differs from y at vertex " + std::to_string(v);
  }
  if (sep.edge_side.size() != g.edge_count()) return "edge side map has the wrong length";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    int side = sep.edge_side[i];
    if (side != 1 && side != 2) return "edge assigned to no side";
    if (!(mark[static_cast<std::size_t>(e.u)] & side) || !(mark[static_cast<std::size_t>(e.v)] & side))
      return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} leaves its side";
  }
  long s_minus_y = 0;
  long miss1 = 0;
  long miss2 = 0;
  for (int v : s) {
    if (in_y[static_cast<std::size_t>(v)]) continue;
    ++s_minus_y;
    if (!(mark[static_cast<std::size_t>(v)] & 1)) ++miss1;
    if (!(mark[static_cast<std::size_t>(v)] & 2)) ++miss2;
  }
  if (3 * miss1 > 2 * s_minus_y) return "side 1 misses more than two thirds of s - y";
  if (3 * miss2 > 2 * s_minus_y) return "side 2 misses more than two thirds of s - y";
  return {};
}

}  // namespace tpw

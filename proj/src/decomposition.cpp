#include "tpw/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "tpw/errors.hpp"
#include "union_find.hpp"

namespace tpw {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

namespace {

TdVerdict fail(std::string axiom, std::string detail, std::vector<int> witness) {
  TdVerdict v;
  v.ok = false;
  v.axiom = std::move(axiom);
  v.detail = std::move(detail);
  v.witness = std::move(witness);
  return v;
}

}  // namespace

TdVerdict verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.vertex_count();
  const int nb = static_cast<int>(td.bags.size());

  for (int b = 0; b < nb; ++b) {
    const auto& bag = td.bags[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] < 0 || bag[i] >= n)
        return fail("structure", "bag " + std::to_string(b) + " holds unknown vertex " + std::to_string(bag[i]), {b});
      if (i > 0 && bag[i - 1] >= bag[i])
        return fail("structure", "bag " + std::to_string(b) + " is not a sorted set", {b});
    }
  }
  UnionFind uf(nb);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b)
      return fail("structure", "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") is invalid", {a, b});
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second || !uf.unite(a, b))
      return fail("structure", "tree edges contain a cycle", {a, b});
  }

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  for (int b = 0; b < nb; ++b)
    for (int v : td.bags[static_cast<std::size_t>(b)]) holders[static_cast<std::size_t>(v)].push_back(b);
  for (int v = 0; v < n; ++v)
    if (holders[static_cast<std::size_t>(v)].empty())
      return fail("vertex coverage", "vertex " + std::to_string(v) + " is in no bag", {v});

  for (const Edge& e : g.edges()) {
    const auto& hu = holders[static_cast<std::size_t>(e.u)];
    const auto& hv = holders[static_cast<std::size_t>(e.v)];
    std::vector<int> common;
    std::set_intersection(hu.begin(), hu.end(), hv.begin(), hv.end(), std::back_inserter(common));
    if (common.empty())
      return fail("edge coverage",
                  "edge not covered: {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}", {e.u, e.v});
  }

  // A vertex set of a forest is connected iff it spans |set|-1 forest edges.
  std::vector<int> spanned(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : td.tree_edges) {
    const auto& ba = td.bags[static_cast<std::size_t>(a)];
    const auto& bb = td.bags[static_cast<std::size_t>(b)];
    std::vector<int> common;
    std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
    for (int v : common) ++spanned[static_cast<std::size_t>(v)];
  }
  for (int v = 0; v < n; ++v)
    if (spanned[static_cast<std::size_t>(v)] + 1 != static_cast<int>(holders[static_cast<std::size_t>(v)].size()))
      return fail("connectivity", "bags containing vertex " + std::to_string(v) + " are not a subtree", {v});
  return {};
}

TreeDecomposition compress_decomposition(TreeDecomposition td) {
  const int nb = static_cast<int>(td.bags.size());
  std::vector<std::set<int>> nbr(static_cast<std::size_t>(nb));
  for (auto [a, b] : td.tree_edges) {
    nbr[static_cast<std::size_t>(a)].insert(b);
    nbr[static_cast<std::size_t>(b)].insert(a);
  }
  std::vector<char> alive(static_cast<std::size_t>(nb), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < nb; ++a) {
      if (!alive[static_cast<std::size_t>(a)]) continue;
      const auto& ba = td.bags[static_cast<std::size_t>(a)];
      for (int b : nbr[static_cast<std::size_t>(a)]) {
        const auto& bb = td.bags[static_cast<std::size_t>(b)];
        if (!std::includes(bb.begin(), bb.end(), ba.begin(), ba.end())) continue;
        for (int c : nbr[static_cast<std::size_t>(a)]) {
          nbr[static_cast<std::size_t>(c)].erase(a);
          if (c != b) {
            nbr[static_cast<std::size_t>(c)].insert(b);
            nbr[static_cast<std::size_t>(b)].insert(c);
          }
        }
        nbr[static_cast<std::size_t>(a)].clear();
        alive[static_cast<std::size_t>(a)] = 0;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> id(static_cast<std::size_t>(nb), -1);
  TreeDecomposition out;
  for (int a = 0; a < nb; ++a) {
    if (!alive[static_cast<std::size_t>(a)]) continue;
    id[static_cast<std::size_t>(a)] = static_cast<int>(out.bags.size());
    out.bags.push_back(std::move(td.bags[static_cast<std::size_t>(a)]));
  }
  for (int a = 0; a < nb; ++a)
    for (int b : nbr[static_cast<std::size_t>(a)])
      if (a < b) out.tree_edges.emplace_back(id[static_cast<std::size_t>(a)], id[static_cast<std::size_t>(b)]);
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

TreeDecomposition connect_decomposition(TreeDecomposition td) {
  const int nb = static_cast<int>(td.bags.size());
  UnionFind uf(nb);
  for (auto [a, b] : td.tree_edges) uf.unite(a, b);
  for (int b = 1; b < nb; ++b)
    if (uf.unite(0, b)) td.tree_edges.emplace_back(0, b);
  return td;
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const std::vector<int>& local) {
  const int nb = static_cast<int>(td.bags.size());
  TreeDecomposition mapped;
  mapped.bags.resize(static_cast<std::size_t>(nb));
  for (int b = 0; b < nb; ++b) {
    for (int v : td.bags[static_cast<std::size_t>(b)]) {
      int lv = local[static_cast<std::size_t>(v)];
      if (lv >= 0) mapped.bags[static_cast<std::size_t>(b)].push_back(lv);
    }
    std::sort(mapped.bags[static_cast<std::size_t>(b)].begin(), mapped.bags[static_cast<std::size_t>(b)].end());
  }
  std::vector<std::set<int>> nbr(static_cast<std::size_t>(nb));
  for (auto [a, b] : td.tree_edges) {
    nbr[static_cast<std::size_t>(a)].insert(b);
    nbr[static_cast<std::size_t>(b)].insert(a);
  }
  std::vector<char> alive(static_cast<std::size_t>(nb), 1);
  for (int e = 0; e < nb; ++e) {
    if (!mapped.bags[static_cast<std::size_t>(e)].empty()) continue;
    alive[static_cast<std::size_t>(e)] = 0;
    auto around = nbr[static_cast<std::size_t>(e)];
    nbr[static_cast<std::size_t>(e)].clear();
    if (around.empty()) continue;
    int keep = *around.begin();
    for (int c : around) {
      nbr[static_cast<std::size_t>(c)].erase(e);
      if (c != keep) {
        nbr[static_cast<std::size_t>(c)].insert(keep);
        nbr[static_cast<std::size_t>(keep)].insert(c);
      }
    }
  }
  std::vector<int> id(static_cast<std::size_t>(nb), -1);
  TreeDecomposition out;
  for (int a = 0; a < nb; ++a) {
    if (!alive[static_cast<std::size_t>(a)]) continue;
    id[static_cast<std::size_t>(a)] = static_cast<int>(out.bags.size());
    out.bags.push_back(std::move(mapped.bags[static_cast<std::size_t>(a)]));
  }
  for (int a = 0; a < nb; ++a)
    for (int b : nbr[static_cast<std::size_t>(a)])
      if (a < b) out.tree_edges.emplace_back(id[static_cast<std::size_t>(a)], id[static_cast<std::size_t>(b)]);
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw InputError("elimination order has wrong length");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0)
      throw InputError("elimination order is not a permutation of the vertices");
    pos[static_cast<std::size_t>(v)] = i;
  }
  std::vector<std::set<int>> cur(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cur[static_cast<std::size_t>(v)].insert(g.neighbors(v).begin(), g.neighbors(v).end());

  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int v : order) {
    const auto& later = cur[static_cast<std::size_t>(v)];
    VertexSet bag(later.begin(), later.end());
    int first = -1;
    for (int w : later)
      if (first < 0 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(first)]) first = w;
    parent[static_cast<std::size_t>(v)] = first;
    for (int a : later) {
      cur[static_cast<std::size_t>(a)].erase(v);
      for (int b : later)
        if (a != b) cur[static_cast<std::size_t>(a)].insert(b);
    }
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = std::move(bag);
  }
  for (int v = 0; v < n; ++v)
    if (parent[static_cast<std::size_t>(v)] >= 0)
      td.tree_edges.emplace_back(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])]);
  return compress_decomposition(std::move(td));
}

TreeDecomposition clique_tree_from_peo(const Graph& g, const EliminationOrder& peo) {
  if (auto bad = find_peo_violation(g, peo))
    throw InputError("not a perfect elimination order: later neighbours " + std::to_string(bad->x) + " and " +
                     std::to_string(bad->y) + " of vertex " + std::to_string(bad->pivot) + " are not adjacent");
  return decomposition_from_elimination(g, peo.order);
}

std::vector<int> min_fill_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> cur(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cur[static_cast<std::size_t>(v)].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long best = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[static_cast<std::size_t>(v)]) continue;
      const auto& nb = cur[static_cast<std::size_t>(v)];
      long fill = 0;
      for (auto a = nb.begin(); a != nb.end(); ++a)
        for (auto b = std::next(a); b != nb.end(); ++b)
          if (!cur[static_cast<std::size_t>(*a)].count(*b)) ++fill;
      if (pick < 0 || fill < best) {
        pick = v;
        best = fill;
      }
    }
    const auto later = cur[static_cast<std::size_t>(pick)];
    for (int a : later) {
      cur[static_cast<std::size_t>(a)].erase(pick);
      for (int b : later)
        if (a != b) cur[static_cast<std::size_t>(a)].insert(b);
    }
    gone[static_cast<std::size_t>(pick)] = 1;
    order.push_back(pick);
  }
  return order;
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[static_cast<std::size_t>(v)] && (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
        pick = v;
    best = std::max(best, deg[static_cast<std::size_t>(pick)]);
    gone[static_cast<std::size_t>(pick)] = 1;
    for (int w : g.neighbors(pick))
      if (!gone[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  return best;
}

TreeDecomposition treewidth_heuristic(const Graph& g) {
  auto chordal = is_chordal(g);
  if (chordal.chordal) return clique_tree_from_peo(g, *chordal.peo);
  return decomposition_from_elimination(g, min_fill_order(g));
}

TreewidthResult treewidth_exact(const Graph& g) {
  auto chordal = is_chordal(g);
  if (chordal.chordal) {
    TreewidthResult res;
    res.decomposition = clique_tree_from_peo(g, *chordal.peo);
    res.width = res.decomposition.width();
    return res;
  }
  return treewidth_dp(g);
}

TreewidthResult treewidth_dp(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kTreewidthExactMaxN)
    throw CapacityError("exact treewidth of a non-chordal graph is limited to " + std::to_string(kTreewidthExactMaxN) +
                        " vertices (got " + std::to_string(n) + ")");
  if (n == 0) return {};

  using Mask = std::uint32_t;
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  // Vertices outside s + {v} reachable from v through s: v's later
  // neighbourhood once s has been eliminated.
  auto q_size = [&](Mask s, int v) {
    Mask comp = Mask{1} << v;
    Mask frontier = comp;
    Mask reach = 0;
    while (frontier) {
      int w = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      reach |= adj[static_cast<std::size_t>(w)];
      Mask fresh = reach & s & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    return __builtin_popcount(reach & ~s & ~(Mask{1} << v));
  };

  const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
  tw[0] = -1;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    int best = 127;
    int arg = -1;
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = __builtin_ctz(rest);
      Mask prev = s & ~(Mask{1} << v);
      int cand = std::max<int>(tw[prev], q_size(prev, v));
      if (cand < best) {
        best = cand;
        arg = v;
      }
    }
    tw[s] = static_cast<std::int8_t>(best);
    last[s] = static_cast<std::int8_t>(arg);
  }
  std::vector<int> order;
  for (Mask s = full; s; s &= ~(Mask{1} << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());

  TreewidthResult res;
  res.width = tw[full];
  res.decomposition = decomposition_from_elimination(g, order);
  if (res.decomposition.width() != res.width) throw ContractError("elimination decomposition width mismatch");
  return res;
}

}  // namespace tpw

#include "tpw/construct.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tpw/errors.hpp"

namespace tpw {

QuadNum lemma3_width_bound(int k, int delta) {
  const QuadNum g = gamma_const();
  return g * QuadNum(k + 1) * (QuadNum(3) * g * QuadNum(delta) - QuadNum(1));
}

QuadNum anchor_lower(int k) { return (gamma_const() + QuadNum(1)) * QuadNum(k + 1); }

QuadNum anchor_upper(int k, int delta) { return QuadNum(3) * anchor_lower(k) * QuadNum(delta); }

QuadNum leaf_case_limit(int k) { return QuadNum(3) * anchor_lower(k); }

QuadNum anchor_bag_limit(int anchor_size, int k) {
  return alpha_const() * QuadNum(anchor_size) - gamma_const() * QuadNum(k + 1);
}

namespace {

struct Piece {
  std::vector<VertexSet> bags;
  int anchor = 0;
};

void require(bool cond, const std::string& what, ConstructStats& stats) {
  if (!cond) throw ContractError(what);
  ++stats.checks;
}

class Builder {
 public:
  Builder(int k, int delta, const ConstructOptions& opts)
      : k_(k),
        opts_(opts),
        lower_(anchor_lower(k)),
        upper_(anchor_upper(k, delta)),
        leaf_limit_(leaf_case_limit(k)),
        width_limit_(lemma3_width_bound(k, delta)) {}

  Piece solve(const Graph& g, const TreeDecomposition& td, const std::optional<VertexSet>& anchor, int depth) {
    const int n = g.vertex_count();
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    std::size_t slot = trace_.size();
    if (opts_.trace) trace_.push_back({});
    TraceEvent ev;
    ev.depth = depth;
    ev.vertices = n;
    ev.anchor_size = anchor ? static_cast<int>(anchor->size()) : 0;

    if (anchor) {
      const QuadNum s(static_cast<std::int64_t>(anchor->size()));
      require(lower_ <= s && s <= upper_, "anchor of size " + std::to_string(anchor->size()) + " is outside its window",
              stats_);
    }

    Piece piece;
    if (QuadNum(n) < lower_) {
      require(!anchor.has_value(), "case 1 reached with an anchor", stats_);
      ev.case_id = 1;
      VertexSet all(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
      piece.bags.push_back(std::move(all));
      piece.anchor = 0;
    } else {
      require(anchor.has_value(), "anchored call without an anchor", stats_);
      const VertexSet& s = *anchor;
      std::vector<char> in_s(static_cast<std::size_t>(n), 0);
      for (int v : s) in_s[static_cast<std::size_t>(v)] = 1;
      VertexSet rest;
      for (int v = 0; v < n; ++v)
        if (!in_s[static_cast<std::size_t>(v)]) rest.push_back(v);
      const QuadNum s_size(static_cast<std::int64_t>(s.size()));

      if (QuadNum(static_cast<std::int64_t>(rest.size())) < lower_) {
        ev.case_id = 2;
        piece.bags.push_back(s);
        if (!rest.empty()) piece.bags.push_back(std::move(rest));
        piece.anchor = 0;
      } else {
        require(s_size != leaf_limit_, "anchor size equals the irrational case boundary", stats_);
        if (s_size < leaf_limit_) {
          ev.case_id = 3;
          piece = peel_leaf(g, td, s, in_s, rest, depth);
        } else {
          ev.case_id = 4;
          piece = split(g, td, s, depth, ev);
        }
      }
      const VertexSet& bag = piece.bags[static_cast<std::size_t>(piece.anchor)];
      require(std::includes(bag.begin(), bag.end(), s.begin(), s.end()), "anchor bag misses an anchor vertex", stats_);
      require(QuadNum(static_cast<std::int64_t>(bag.size())) <= anchor_bag_limit(static_cast<int>(s.size()), k_),
              "anchor bag of size " + std::to_string(bag.size()) + " exceeds alpha|S| - gamma(k+1)", stats_);
    }

    int width = 0;
    for (const auto& b : piece.bags) width = std::max(width, static_cast<int>(b.size()));
    require(QuadNum(width) <= width_limit_, "bag of size " + std::to_string(width) + " exceeds the width bound", stats_);
    if (opts_.verify_every_node) {
      auto verdict = verify_tree_partition(g, TreePartition::from_bags(n, piece.bags));
      require(verdict.ok, "recursion node returned an invalid tree-partition: " + verdict.detail, stats_);
    }

    ++stats_.case_count[static_cast<std::size_t>(ev.case_id)];
    if (opts_.trace) {
      ev.anchor_bag_size = static_cast<int>(piece.bags[static_cast<std::size_t>(piece.anchor)].size());
      ev.bags = static_cast<int>(piece.bags.size());
      ev.width = width;
      trace_[slot] = ev;
    }
    return piece;
  }

  ConstructStats stats_;
  std::vector<TraceEvent> trace_;

 private:
  // Anchor small enough to become a leaf: recurse on G - S anchored at the
  // neighbourhood of S, then hang S off the bag holding that neighbourhood.
  Piece peel_leaf(const Graph& g, const TreeDecomposition& td, const VertexSet& s, const std::vector<char>& in_s,
                  const VertexSet& rest, int depth) {
    const int n = g.vertex_count();
    std::vector<char> in_n(static_cast<std::size_t>(n), 0);
    for (int v : s)
      for (int w : g.neighbors(v))
        if (!in_s[static_cast<std::size_t>(w)]) in_n[static_cast<std::size_t>(w)] = 1;
    auto count = static_cast<std::int64_t>(std::count(in_n.begin(), in_n.end(), 1));
    const std::int64_t want = lower_.ceil();
    for (int v : rest) {
      if (count >= want) break;
      if (!in_n[static_cast<std::size_t>(v)]) {
        in_n[static_cast<std::size_t>(v)] = 1;
        ++count;
      }
    }
    Subgraph sub = induced_subgraph(g, rest);
    require(sub.graph.vertex_count() < n, "leaf case did not shrink the graph", stats_);
    VertexSet next_anchor;
    for (int v : rest)
      if (in_n[static_cast<std::size_t>(v)]) next_anchor.push_back(sub.from_parent[static_cast<std::size_t>(v)]);
    std::sort(next_anchor.begin(), next_anchor.end());

    Piece child = solve(sub.graph, restrict_decomposition(td, sub.from_parent), next_anchor, depth + 1);
    Piece out;
    out.bags.reserve(child.bags.size() + 1);
    for (const auto& b : child.bags) out.bags.push_back(lift(b, sub.to_parent));
    out.bags.push_back(s);
    out.anchor = static_cast<int>(out.bags.size()) - 1;
    return out;
  }

  // Large anchor: split along a balanced separator, recurse on both
  // edge-disjoint sides and fuse the two anchor bags.
  Piece split(const Graph& g, const TreeDecomposition& td, const VertexSet& s, int depth, TraceEvent& ev) {
    const int n = g.vertex_count();
    SeparatorResult sep = balanced_separator(g, td, s);
    require(static_cast<int>(sep.y.size()) <= k_ + 1, "separator larger than k+1", stats_);
    std::vector<char> in_y(static_cast<std::size_t>(n), 0);
    for (int v : sep.y) in_y[static_cast<std::size_t>(v)] = 1;

    std::array<const VertexSet*, 2> sides{&sep.v1, &sep.v2};
    std::array<Subgraph, 2> subs;
    std::array<VertexSet, 2> anchors;
    std::array<int, 2> priv{0, 0};
    for (int i = 0; i < 2; ++i) {
      const VertexSet& side = *sides[static_cast<std::size_t>(i)];
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (sep.edge_side[e] == i + 1) edges.push_back(g.edges()[e]);
      subs[static_cast<std::size_t>(i)] = edge_subgraph(g, side, edges);
      VertexSet si;
      for (int v : s)
        if (std::binary_search(side.begin(), side.end(), v)) {
          si.push_back(v);
          if (!in_y[static_cast<std::size_t>(v)]) ++priv[static_cast<std::size_t>(i)];
        }
      si.insert(si.end(), sep.y.begin(), sep.y.end());
      si = make_vertex_set(std::move(si));
      for (int& v : si) v = subs[static_cast<std::size_t>(i)].from_parent[static_cast<std::size_t>(v)];
      anchors[static_cast<std::size_t>(i)] = make_vertex_set(std::move(si));
    }
    require(priv[0] > 0 && priv[1] > 0, "separator left one side without private anchor vertices", stats_);
    ev.separator_size = static_cast<int>(sep.y.size());
    ev.private1 = priv[0];
    ev.private2 = priv[1];

    Piece out;
    VertexSet fused;
    for (int i = 0; i < 2; ++i) {
      const Subgraph& sub = subs[static_cast<std::size_t>(i)];
      require(sub.graph.vertex_count() < n, "separator side did not shrink the graph", stats_);
      Piece child = solve(sub.graph, restrict_decomposition(td, sub.from_parent), anchors[static_cast<std::size_t>(i)],
                          depth + 1);
      for (std::size_t b = 0; b < child.bags.size(); ++b) {
        VertexSet lifted = lift(child.bags[b], sub.to_parent);
        if (static_cast<int>(b) == child.anchor)
          fused.insert(fused.end(), lifted.begin(), lifted.end());
        else
          out.bags.push_back(std::move(lifted));
      }
    }
    out.bags.insert(out.bags.begin(), make_vertex_set(std::move(fused)));
    out.anchor = 0;
    return out;
  }

  static VertexSet lift(const VertexSet& local, const std::vector<int>& to_parent) {
    VertexSet out;
    out.reserve(local.size());
    for (int v : local) out.push_back(to_parent[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
  }

  int k_;
  ConstructOptions opts_;
  QuadNum lower_;
  QuadNum upper_;
  QuadNum leaf_limit_;
  QuadNum width_limit_;
};

}  // namespace

AnchoredResult anchored_construct(const AnchorCall& call, const ConstructOptions& opts) {
  if (call.k < 1 || call.delta < 1) throw InputError("anchored construction needs k >= 1 and delta >= 1");
  Builder builder(call.k, call.delta, opts);
  std::optional<VertexSet> anchor;
  if (call.anchor) anchor = make_vertex_set(*call.anchor);
  Piece piece = builder.solve(call.graph, call.td, anchor, 0);
  AnchoredResult res;
  res.partition = TreePartition::from_bags(call.graph.vertex_count(), piece.bags);
  res.anchor_bag = piece.anchor;
  res.stats = builder.stats_;
  res.trace = std::move(builder.trace_);
  return res;
}

ConstructResult construct_tree_partition(const Graph& g, const TreeDecomposition& td, int delta,
                                         const ConstructOptions& opts) {
  if (auto verdict = verify_tree_decomposition(g, td); !verdict)
    throw InputError("tree decomposition does not verify (" + verdict.axiom + "): " + verdict.detail);
  if (delta < 1) throw InputError("degree bound must be at least 1");
  if (delta < max_degree(g))
    throw InputError("degree bound " + std::to_string(delta) + " is below the maximum degree " +
                     std::to_string(max_degree(g)));

  ConstructResult res;
  res.k = std::max(1, td.width());
  res.delta = delta;
  Builder builder(res.k, delta, opts);
  const std::int64_t entry = anchor_lower(res.k).ceil();

  std::vector<VertexSet> bags;
  for (const VertexSet& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    std::optional<VertexSet> anchor;
    if (QuadNum(static_cast<std::int64_t>(comp.size())) >= anchor_lower(res.k)) {
      VertexSet s(static_cast<std::size_t>(entry));
      for (std::int64_t i = 0; i < entry; ++i) s[static_cast<std::size_t>(i)] = static_cast<int>(i);
      anchor = std::move(s);
    }
    Piece piece = builder.solve(sub.graph, restrict_decomposition(td, sub.from_parent), anchor, 0);
    for (const auto& b : piece.bags) {
      VertexSet lifted;
      for (int v : b) lifted.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
      bags.push_back(make_vertex_set(std::move(lifted)));
    }
  }
  res.partition = TreePartition::from_bags(g.vertex_count(), bags);
  res.stats = builder.stats_;
  res.trace = std::move(builder.trace_);

  auto verdict = verify_tree_partition(g, res.partition);
  if (!verdict) throw ContractError("construction produced an invalid tree-partition: " + verdict.detail);
  if (verdict.width > lemma3_width_bound(res.k, delta).ceil())
    throw ContractError("construction exceeded its width guarantee");
  return res;
}

std::string trace_to_jsonl(const std::vector<TraceEvent>& trace) {
  std::ostringstream out;
  for (const TraceEvent& ev : trace) {
    nlohmann::ordered_json j;
    j["depth"] = ev.depth;
    j["case"] = ev.case_id;
    j["vertices"] = ev.vertices;
    j["anchor"] = ev.anchor_size;
    j["anchor_bag"] = ev.anchor_bag_size;
    j["bags"] = ev.bags;
    j["width"] = ev.width;
    if (ev.case_id == 4) {
      j["separator"] = ev.separator_size;
      j["private1"] = ev.private1;
      j["private2"] = ev.private2;
    }
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace tpw

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"
#include "tpw/partition.hpp"
#include "tpw/quadnum.hpp"

namespace tpw {

/// gamma (k+1) (3 gamma delta - 1): the width guaranteed by the construction.
QuadNum lemma3_width_bound(int k, int delta);
/// (gamma+1)(k+1): below this many vertices everything goes in one bag, and
/// anchor sets are at least this large.
QuadNum anchor_lower(int k);
/// 3 (gamma+1)(k+1) delta: the largest admissible anchor set.
QuadNum anchor_upper(int k, int delta);
/// 3 (gamma+1)(k+1): anchors up to this size are peeled off as a leaf bag.
QuadNum leaf_case_limit(int k);
/// alpha |S| - gamma (k+1): size limit of the bag that holds the anchor.
QuadNum anchor_bag_limit(int anchor_size, int k);

/// One recursion node. `anchor_size` is 0 when no anchor was given.
struct TraceEvent {
  int depth = 0;
  int case_id = 0;
  int vertices = 0;
  int anchor_size = 0;
  int anchor_bag_size = 0;
  int bags = 0;
  int width = 0;
  int separator_size = -1;  // case 4 only
  int private1 = -1;        // case 4: anchor vertices only on side 1
  int private2 = -1;
};

struct ConstructStats {
  int nodes = 0;
  int max_depth = 0;
  std::array<int, 5> case_count{};  // index = case id
  long checks = 0;                  // postcondition checks evaluated, all passed
};

struct ConstructOptions {
  bool trace = false;
  /// Re-verify the tree-partition returned by every recursion node.
  bool verify_every_node = false;
};

struct ConstructResult {
  TreePartition partition;
  int k = 0;
  int delta = 0;
  std::vector<TraceEvent> trace;
  ConstructStats stats;
};

/// Input of one anchored call. The degree bound is that of the original
/// graph and is never recomputed on subgraphs.
struct AnchorCall {
  Graph graph;
  TreeDecomposition td;
  std::optional<VertexSet> anchor;
  int k = 1;
  int delta = 1;
};

struct AnchoredResult {
  TreePartition partition;
  int anchor_bag = 0;
  ConstructStats stats;
  std::vector<TraceEvent> trace;
};

/// Tree-partition of call.graph of width <= ceil(lemma3_width_bound) whose
/// bag `anchor_bag` contains the anchor and at most alpha|S| - gamma(k+1)
/// vertices. Throws ContractError if the anchor is outside its size window or
/// any node postcondition fails.
AnchoredResult anchored_construct(const AnchorCall& call, const ConstructOptions& opts = {});

/// Tree-partition of g of width <= ceil(lemma3_width_bound(k, delta)) where k
/// is the width of td (at least 1). Components are handled independently.
/// Throws InputError if td does not verify, delta < 1 or delta < max degree.
ConstructResult construct_tree_partition(const Graph& g, const TreeDecomposition& td, int delta,
                                         const ConstructOptions& opts = {});

/// One JSON object per line.
std::string trace_to_jsonl(const std::vector<TraceEvent>& trace);

}  // namespace tpw

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpw/graph.hpp"
#include "tpw/quadnum.hpp"

namespace tpw {

/// Provenance and analytic claims attached to a generated graph.
struct InstanceMeta {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::optional<bool> claimed_chordal;
  std::optional<int> claimed_tw;
  std::optional<int> claimed_maxdeg_bound;
  std::optional<Rational> claimed_tpw_lower;
  std::optional<Rational> claimed_tpw_upper;
  std::vector<std::string> vertex_labels;  // one per vertex, distinct

  std::optional<std::int64_t> param(const std::string& key) const;
};

struct Instance {
  Graph graph;
  InstanceMeta meta;
};

using FamilyParams = std::map<std::string, std::int64_t>;

/// Vertices (x,y) for x in [1,n], y in [1,k], adjacent iff |x1-x2| <= 1.
/// (x,y) has index (x-1)k + (y-1).
Instance gen_grid_h(int n, int k);

/// The grid above plus ceil((delta-3k)/2) common neighbours ("gadgets") for
/// every horizontal edge (x,y)-(x+1,y). Gadgets follow the grid vertices,
/// grouped by horizontal edge in (x, y, l) order. Requires k >= 2,
/// delta >= 3k+1 and n > max{k(delta-3k)/2, 2}.
Instance gen_lower_general(int k, int delta, int n);

/// Hub r (index 0), path v_1..v_delta (indices 1..delta) all joined to r, and
/// (delta-3)/2 common neighbours w_{i,l} of each path edge v_i v_{i+1},
/// appended in (i, l) order. delta must be odd and >= 5; the lower-bound claim
/// is attached only for delta >= 11.
Instance gen_lower_tw2(int delta);

/// Family dispatcher: path, cycle, clique, wheel, random_ktree, random_tree,
/// random_connected, grid_h, lower_general, lower_tw2. Unknown families or
/// invalid parameters raise InputError.
Instance gen_family(const std::string& name, const FamilyParams& params, std::uint64_t seed);

/// Same checks as gen_family without building anything.
void validate_family(const std::string& name, const FamilyParams& params);

std::vector<std::string> family_names();

}  // namespace tpw

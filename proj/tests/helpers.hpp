#pragma once

#include <vector>

#include "tpw/graph.hpp"

namespace testutil {

inline tpw::Graph make(int n, std::vector<tpw::Edge> edges) { return tpw::Graph::from_edges(n, edges); }

inline tpw::Graph path(int n) {
  std::vector<tpw::Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return make(n, e);
}

inline tpw::Graph cycle(int n) {
  std::vector<tpw::Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return make(n, e);
}

inline tpw::Graph clique(int n) {
  std::vector<tpw::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return make(n, e);
}

}  // namespace testutil

#include "tpw/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "tpw/errors.hpp"

namespace tpw {

std::optional<std::int64_t> InstanceMeta::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string idx_label(int v) { return "v" + std::to_string(v); }

std::vector<std::string> plain_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.push_back(idx_label(v));
  return out;
}

std::int64_t get(const FamilyParams& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InputError("missing parameter '" + key + "'");
  return it->second;
}

std::int64_t get_or(const FamilyParams& p, const std::string& key, std::int64_t fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void check_known(const std::string& family, const FamilyParams& p, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : p) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw InputError("family " + family + " does not take parameter '" + key + "'");
  }
}

void check_lower_general(std::int64_t k, std::int64_t delta, std::int64_t n) {
  if (k < 2 || delta < 3 * k + 1 || 2 * n <= k * (delta - 3 * k) || n <= 2)
    throw InputError("lower_general requires k >= 2, delta >= 3k+1 and n > max{k(delta-3k)/2, 2} (got k=" +
                     std::to_string(k) + ", delta=" + std::to_string(delta) + ", n=" + std::to_string(n) + ")");
}

void check_lower_tw2(std::int64_t delta) {
  if (delta % 2 == 0) throw InputError("lower_tw2 requires an odd degree bound (got " + std::to_string(delta) + ")");
  if (delta < 5) throw InputError("lower_tw2 requires delta >= 5 (got " + std::to_string(delta) + ")");
}

constexpr int kMaxVertices = 1 << 20;

void check_size(std::int64_t n, const std::string& what) {
  if (n < 1 || n > kMaxVertices) throw InputError(what + " must be in [1, " + std::to_string(kMaxVertices) + "]");
}

Instance make_path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  Instance inst{Graph::from_edges(n, e), {}};
  inst.meta.family = "path";
  inst.meta.params = {{"n", n}};
  inst.meta.claimed_chordal = true;
  inst.meta.claimed_tw = n >= 2 ? 1 : 0;
  inst.meta.claimed_maxdeg_bound = std::min(2, n - 1);
  inst.meta.claimed_tpw_lower = Rational(1);
  inst.meta.claimed_tpw_upper = Rational(1);
  inst.meta.vertex_labels = plain_labels(n);
  return inst;
}

Instance make_cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  Instance inst{Graph::from_edges(n, e), {}};
  inst.meta.family = "cycle";
  inst.meta.params = {{"n", n}};
  inst.meta.claimed_chordal = n == 3;
  inst.meta.claimed_tw = 2;
  inst.meta.claimed_maxdeg_bound = 2;
  inst.meta.claimed_tpw_lower = Rational(2);
  inst.meta.claimed_tpw_upper = Rational(2);
  inst.meta.vertex_labels = plain_labels(n);
  return inst;
}

Instance make_clique(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  Instance inst{Graph::from_edges(n, e), {}};
  inst.meta.family = "clique";
  inst.meta.params = {{"n", n}};
  inst.meta.claimed_chordal = true;
  inst.meta.claimed_tw = n - 1;
  inst.meta.claimed_maxdeg_bound = n - 1;
  // A quotient of a complete graph is complete, so a forest quotient has at most two bags.
  inst.meta.claimed_tpw_lower = Rational((n + 1) / 2);
  inst.meta.claimed_tpw_upper = Rational((n + 1) / 2);
  inst.meta.vertex_labels = plain_labels(n);
  return inst;
}

Instance make_wheel(int rim) {
  std::vector<Edge> e;
  for (int i = 1; i <= rim; ++i) {
    e.push_back({0, i});
    e.push_back({i, i % rim + 1});
  }
  Instance inst{Graph::from_edges(rim + 1, e), {}};
  inst.meta.family = "wheel";
  inst.meta.params = {{"n", rim}};
  inst.meta.claimed_chordal = rim == 3;
  inst.meta.claimed_tw = 3;
  inst.meta.claimed_maxdeg_bound = std::max(rim, 3);
  inst.meta.claimed_tpw_lower = Rational(2);
  inst.meta.vertex_labels.push_back("hub");
  for (int i = 1; i <= rim; ++i) inst.meta.vertex_labels.push_back("rim" + std::to_string(i));
  return inst;
}

Instance make_random_ktree(int n, int k, int cap, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  const int base = std::min(n, k + 1);
  for (int u = 0; u < base; ++u)
    for (int v = u + 1; v < base; ++v) e.push_back({u, v});
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < base; ++v) deg[static_cast<std::size_t>(v)] = base - 1;
  std::vector<std::vector<int>> cliques;
  if (n > k + 1) {
    for (int skip = 0; skip <= k; ++skip) {
      std::vector<int> c;
      for (int v = 0; v <= k; ++v)
        if (v != skip) c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }
  for (int v = k + 1; v < n; ++v) {
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < cliques.size(); ++i)
      if (cap == 0 || std::all_of(cliques[i].begin(), cliques[i].end(),
                                  [&](int u) { return deg[static_cast<std::size_t>(u)] < cap; }))
        ok.push_back(i);
    if (ok.empty())
      throw InputError("random_ktree: no k-clique left below the degree cap " + std::to_string(cap) + " at vertex " +
                       std::to_string(v) + "; try another seed or a larger cap");
    std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
    const std::vector<int> c = cliques[ok[pick(rng)]];
    for (int u : c) {
      e.push_back({u, v});
      ++deg[static_cast<std::size_t>(u)];
    }
    deg[static_cast<std::size_t>(v)] = k;
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      std::vector<int> next;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (j != drop) next.push_back(c[j]);
      next.push_back(v);
      cliques.push_back(std::move(next));
    }
  }
  Instance inst{Graph::from_edges(n, e), {}};
  inst.meta.family = "random_ktree";
  inst.meta.params = {{"n", n}, {"k", k}, {"seed", static_cast<std::int64_t>(seed)}};
  if (cap > 0) inst.meta.params["max_degree"] = cap;
  inst.meta.claimed_chordal = true;
  inst.meta.claimed_tw = std::min(k, n - 1);
  inst.meta.claimed_maxdeg_bound = cap > 0 ? cap : max_degree(inst.graph);
  if (k == 1) {
    inst.meta.claimed_tpw_lower = Rational(1);
    inst.meta.claimed_tpw_upper = Rational(1);
  }
  inst.meta.vertex_labels = plain_labels(n);
  return inst;
}

Instance make_random_connected(int n, int percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    e.push_back({parent(rng), v});
  }
  std::uniform_int_distribution<int> coin(0, 99);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < percent) e.push_back({u, v});
  Instance inst{Graph::from_edges(n, e), {}};
  inst.meta.family = "random_connected";
  inst.meta.params = {{"n", n}, {"p", percent}, {"seed", static_cast<std::int64_t>(seed)}};
  inst.meta.vertex_labels = plain_labels(n);
  return inst;
}

void add_grid(int n, int k, std::vector<Edge>& e, std::vector<std::string>& labels) {
  auto id = [k](int x, int y) { return (x - 1) * k + (y - 1); };
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= k; ++y) {
      labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      for (int y2 = y + 1; y2 <= k; ++y2) e.push_back({id(x, y), id(x, y2)});
      if (x < n)
        for (int y2 = 1; y2 <= k; ++y2) e.push_back({id(x, y), id(x + 1, y2)});
    }
}

}  // namespace

Instance gen_grid_h(int n, int k) {
  check_size(n, "grid_h n");
  check_size(k, "grid_h k");
  std::vector<Edge> e;
  Instance inst;
  add_grid(n, k, e, inst.meta.vertex_labels);
  inst.graph = Graph::from_edges(n * k, e);
  inst.meta.family = "grid_h";
  inst.meta.params = {{"n", n}, {"k", k}};
  inst.meta.claimed_chordal = true;
  inst.meta.claimed_tw = n >= 2 ? 2 * k - 1 : k - 1;
  inst.meta.claimed_maxdeg_bound = n >= 3 ? 3 * k - 1 : n == 2 ? 2 * k - 1 : k - 1;
  return inst;
}

Instance gen_lower_general(int k, int delta, int n) {
  check_lower_general(k, delta, n);
  const int gadgets = (delta - 3 * k + 1) / 2;
  std::vector<Edge> e;
  Instance inst;
  add_grid(n, k, e, inst.meta.vertex_labels);
  int next = n * k;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y <= k; ++y)
      for (int l = 1; l <= gadgets; ++l) {
        int v = (x - 1) * k + (y - 1);
        int w = x * k + (y - 1);
        e.push_back({next, v});
        e.push_back({next, w});
        inst.meta.vertex_labels.push_back("g(" + std::to_string(x) + "," + std::to_string(y) + "," +
                                          std::to_string(l) + ")");
        ++next;
      }
  inst.graph = Graph::from_edges(next, e);
  inst.meta.family = "lower_general";
  inst.meta.params = {{"k", k}, {"delta", delta}, {"n", n}};
  inst.meta.claimed_chordal = true;
  inst.meta.claimed_tw = 2 * k - 1;
  inst.meta.claimed_maxdeg_bound = delta;
  inst.meta.claimed_tpw_lower = Rational(k * (delta - 3 * k), 4);
  return inst;
}

Instance gen_lower_tw2(int delta) {
  check_lower_tw2(delta);
  const int per_edge = (delta - 3) / 2;
  std::vector<Edge> e;
  Instance inst;
  inst.meta.vertex_labels.push_back("r");
  for (int i = 1; i <= delta; ++i) {
    inst.meta.vertex_labels.push_back("v" + std::to_string(i));
    e.push_back({0, i});
    if (i < delta) e.push_back({i, i + 1});
  }
  int next = delta + 1;
  for (int i = 1; i < delta; ++i)
    for (int l = 1; l <= per_edge; ++l) {
      e.push_back({next, i});
      e.push_back({next, i + 1});
      inst.meta.vertex_labels.push_back("w(" + std::to_string(i) + "," + std::to_string(l) + ")");
      ++next;
    }
  inst.graph = Graph::from_edges(next, e);
  inst.meta.family = "lower_tw2";
  inst.meta.params = {{"delta", delta}};
  inst.meta.claimed_chordal = true;
  inst.meta.claimed_tw = 2;
  inst.meta.claimed_maxdeg_bound = delta;
  if (delta >= 11) inst.meta.claimed_tpw_lower = Rational(2 * (delta - 1), 3);
  return inst;
}

std::vector<std::string> family_names() {
  return {"path", "cycle", "clique", "wheel", "random_ktree", "random_tree", "random_connected",
          "grid_h", "lower_general", "lower_tw2"};
}

void validate_family(const std::string& name, const FamilyParams& p) {
  if (name == "path" || name == "clique") {
    check_known(name, p, {"n"});
    check_size(get(p, "n"), name + " n");
  } else if (name == "cycle") {
    check_known(name, p, {"n"});
    if (get(p, "n") < 3) throw InputError("cycle needs n >= 3");
    check_size(get(p, "n"), "cycle n");
  } else if (name == "wheel") {
    check_known(name, p, {"n"});
    if (get(p, "n") < 3) throw InputError("wheel needs a rim of n >= 3 vertices");
    check_size(get(p, "n"), "wheel n");
  } else if (name == "random_ktree" || name == "random_tree") {
    check_known(name, p, {"n", "k", "max_degree"});
    check_size(get(p, "n"), name + " n");
    std::int64_t k = name == "random_tree" ? get_or(p, "k", 1) : get(p, "k");
    if (name == "random_tree" && k != 1) throw InputError("random_tree is the k=1 random k-tree");
    if (k < 1 || k > 64) throw InputError("random_ktree needs 1 <= k <= 64");
    std::int64_t cap = get_or(p, "max_degree", 0);
    if (cap != 0 && cap <= k) throw InputError("random_ktree max_degree must exceed k");
  } else if (name == "random_connected") {
    check_known(name, p, {"n", "p"});
    check_size(get(p, "n"), "random_connected n");
    std::int64_t pc = get_or(p, "p", 30);
    if (pc < 0 || pc > 100) throw InputError("random_connected p is a percentage in [0, 100]");
  } else if (name == "grid_h") {
    check_known(name, p, {"n", "k"});
    check_size(get(p, "n"), "grid_h n");
    check_size(get(p, "k"), "grid_h k");
    if (get(p, "n") * get(p, "k") > kMaxVertices) throw InputError("grid_h too large");
  } else if (name == "lower_general") {
    check_known(name, p, {"k", "delta", "n"});
    std::int64_t k = get(p, "k");
    std::int64_t delta = get(p, "delta");
    std::int64_t n = get(p, "n");
    check_lower_general(k, delta, n);
    if (n * k * (1 + delta) > kMaxVertices) throw InputError("lower_general too large");
  } else if (name == "lower_tw2") {
    check_known(name, p, {"delta"});
    std::int64_t delta = get(p, "delta");
    check_lower_tw2(delta);
    if (delta > 1001) throw InputError("lower_tw2 delta too large");
  } else {
    throw InputError("unknown family '" + name + "'");
  }
}

Instance gen_family(const std::string& name, const FamilyParams& p, std::uint64_t seed) {
  validate_family(name, p);
  auto i = [&](const std::string& key) { return static_cast<int>(get(p, key)); };
  if (name == "path") return make_path(i("n"));
  if (name == "cycle") return make_cycle(i("n"));
  if (name == "clique") return make_clique(i("n"));
  if (name == "wheel") return make_wheel(i("n"));
  if (name == "random_ktree") return make_random_ktree(i("n"), i("k"), static_cast<int>(get_or(p, "max_degree", 0)), seed);
  if (name == "random_tree") {
    Instance inst = make_random_ktree(i("n"), 1, static_cast<int>(get_or(p, "max_degree", 0)), seed);
    inst.meta.family = name;
    inst.meta.params.erase("k");
    return inst;
  }
  if (name == "random_connected") return make_random_connected(i("n"), static_cast<int>(get_or(p, "p", 30)), seed);
  if (name == "grid_h") return gen_grid_h(i("n"), i("k"));
  if (name == "lower_general") return gen_lower_general(i("k"), i("delta"), i("n"));
  return gen_lower_tw2(i("delta"));
}

}  // namespace tpw

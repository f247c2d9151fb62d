// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance --cli <path to tpw executable>.
#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"
#include "tpw/bounds.hpp"
#include "tpw/chordal.hpp"
#include "tpw/construct.hpp"
#include "tpw/decomposition.hpp"
#include "tpw/generators.hpp"
#include "tpw/partition.hpp"

using namespace tpw;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

Outcome oracle_correctness() {
  Outcome o;
  auto start = Clock::now();
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    Instance k = gen_family("clique", {{"n", n}}, 0);
    ExactTpwResult r = exact_tpw(k.graph);
    if (!r.complete || r.lower_bound != (n + 1) / 2 || oracle::brute_tpw(k.graph) != (n + 1) / 2)
      o.fail("K" + std::to_string(n) + " gave " + std::to_string(r.lower_bound));
    ++checked;
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    int n = 2 + static_cast<int>(seed % 9);
    Instance t = gen_family("random_tree", {{"n", n}}, seed);
    ExactTpwResult r = exact_tpw(t.graph);
    if (!r.complete || r.lower_bound != 1 || oracle::brute_tpw(t.graph) != 1)
      o.fail("tree seed " + std::to_string(seed) + " gave " + std::to_string(r.lower_bound));
    ++checked;
  }
  for (int n = 4; n <= 8; ++n) {
    Instance c = gen_family("cycle", {{"n", n}}, 0);
    ExactTpwResult r = exact_tpw(c.graph);
    if (!r.complete || r.lower_bound != 2 || oracle::brute_tpw(c.graph) != 2)
      o.fail("C" + std::to_string(n) + " gave " + std::to_string(r.lower_bound));
    ++checked;
  }
  double secs = seconds_since(start);
  if (secs >= 300) o.fail("took " + std::to_string(secs) + " s");
  o.note = o.pass ? std::to_string(checked) + " instances exact, " + std::to_string(secs) + " s" : o.note;
  return o;
}

Outcome seese_invariant() {
  Outcome o;
  int graphs = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 2 + static_cast<int>(seed % 8);
    Instance g = gen_family("random_connected", {{"n", n}, {"p", 10 + static_cast<std::int64_t>(seed * 7 % 60)}}, seed);
    int tw = treewidth_exact(g.graph).width;
    ExactTpwResult r = exact_tpw(g.graph);
    if (!r.complete) o.fail("search incomplete");
    if (r.lower_bound != oracle::brute_tpw(g.graph)) o.fail("exact disagrees with brute force, seed " + std::to_string(seed));
    if (2 * r.lower_bound < tw + 1) o.fail("violation at seed " + std::to_string(seed));
    ++graphs;
  }
  if (o.pass) o.note = std::to_string(graphs) + " graphs, 0 violations";
  return o;
}

Outcome chordal_bound() {
  Outcome o;
  int graphs = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    int k = 1 + static_cast<int>(seed % 3);
    int n = 4 + static_cast<int>(seed % 6);
    Instance g = gen_family("random_ktree", {{"n", n}, {"k", k}}, seed);
    int delta = max_degree(g.graph);
    if (delta < 2) continue;
    int tw = treewidth_exact(g.graph).width;
    ExactTpwResult r = exact_tpw(g.graph);
    if (!r.complete) o.fail("search incomplete");
    if (r.lower_bound > tw * (delta - 1)) o.fail("violation at seed " + std::to_string(seed));
    ++graphs;
  }
  if (graphs < 100) o.fail("only " + std::to_string(graphs) + " graphs with delta >= 2");
  if (o.pass) o.note = std::to_string(graphs) + " k-trees, 0 violations";
  return o;
}

Outcome lemma3_guarantee() {
  Outcome o;
  auto start = Clock::now();
  ExperimentPlan suite = builtin_plan("lemma3");
  long checks = 0;
  std::array<int, 5> cases{};
  for (const PlanEntry& e : suite.entries) {
    Instance inst = gen_family(e.family, e.params, e.seed);
    TreeDecomposition td = treewidth_heuristic(inst.graph);
    if (is_chordal(inst.graph).chordal || inst.graph.vertex_count() <= kTreewidthExactMaxN)
      td = treewidth_exact(inst.graph).decomposition;
    int delta = std::max(1, max_degree(inst.graph));
    ConstructOptions opts;
    opts.verify_every_node = true;
    try {
      ConstructResult r = construct_tree_partition(inst.graph, td, delta, opts);
      if (!verify_tree_partition(inst.graph, r.partition).ok) o.fail(e.family + ": output does not verify");
      if (r.partition.width() > lemma3_width_bound(r.k, delta).ceil()) o.fail(e.family + ": width above the bound");
      checks += r.stats.checks;
      for (std::size_t c = 1; c < 5; ++c) cases[c] += r.stats.case_count[c];
    } catch (const std::exception& ex) {
      o.fail(e.family + ": " + ex.what());
    }
  }
  double secs = seconds_since(start);
  if (secs >= 120) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream note;
    note << suite.entries.size() << " instances, " << checks << " node checks, cases 1-4 = " << cases[1] << '/'
         << cases[2] << '/' << cases[3] << '/' << cases[4] << ", " << secs << " s";
    o.note = note.str();
  }
  return o;
}

Outcome separator_contract() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int triples = 0;
  for (std::uint64_t seed = 1; seed <= 240; ++seed) {
    Instance inst = seed % 2 ? gen_family("random_ktree", {{"n", 3 + static_cast<std::int64_t>(seed % 28)},
                                                           {"k", 1 + static_cast<std::int64_t>(seed % 4)}}, seed)
                             : gen_family("random_connected", {{"n", 3 + static_cast<std::int64_t>(seed % 14)},
                                                               {"p", 25}}, seed);
    TreeDecomposition td = treewidth_heuristic(inst.graph);
    VertexSet s;
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
      if (rng() % 3 != 0) s.push_back(v);
    SeparatorResult sep = balanced_separator(inst.graph, td, s);
    std::string why = oracle::separator_violation(inst.graph, td.width(), s, sep);
    if (!why.empty()) o.fail(why + " at seed " + std::to_string(seed));
    ++triples;
  }
  if (o.pass) o.note = std::to_string(triples) + " triples, 0 violations";
  return o;
}

// Random tree-partition: a BFS layering with some quotient edges contracted.
TreePartition random_tree_partition(const Graph& g, std::mt19937_64& rng) {
  TreePartition p = bfs_layering(g, static_cast<int>(rng() % static_cast<std::uint64_t>(g.vertex_count())));
  std::vector<int> bag_of = p.assignment();
  int merges = static_cast<int>(rng() % 4);
  for (int i = 0; i < merges; ++i) {
    Graph q = quotient_graph(g, TreePartition::from_assignment(bag_of));
    if (q.edge_count() == 0) break;
    Edge e = q.edges()[rng() % q.edge_count()];
    for (int& b : bag_of)
      if (b == e.v) b = e.u;
    std::vector<int> ids = bag_of;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int& b : bag_of) b = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), b) - ids.begin());
  }
  return TreePartition::from_assignment(bag_of);
}

Outcome refinement() {
  Outcome o;
  std::mt19937_64 rng(77);
  int instances = 0;
  int sets = 0;
  for (std::uint64_t seed = 1; seed <= 210; ++seed) {
    std::string family = seed % 3 == 0 ? "lower_tw2" : "random_ktree";
    Instance inst = family == "lower_tw2"
                        ? gen_family(family, {{"delta", 5 + 2 * static_cast<std::int64_t>(seed % 3)}}, 0)
                        : gen_family(family, {{"n", 4 + static_cast<std::int64_t>(seed % 9)},
                                              {"k", 1 + static_cast<std::int64_t>(seed % 3)}}, seed);
    const Graph& g = inst.graph;
    TreePartition p = random_tree_partition(g, rng);
    if (!verify_tree_partition(g, p).ok) {
      o.fail("generated partition invalid");
      continue;
    }
    TreePartition r = refine_connected(g, p);
    if (!verify_tree_partition(g, r).ok) o.fail("refinement does not verify, seed " + std::to_string(seed));
    if (r.width() > p.width()) o.fail("refinement increased width, seed " + std::to_string(seed));
    for (const VertexSet& bag : r.bags())
      if (!oracle::induces_connected(g, bag)) o.fail("disconnected bag, seed " + std::to_string(seed));
    VertexSet simp = simplicial_vertices(g);
    for (int sample = 0; sample < 5; ++sample) {
      std::vector<int> order = simp;
      std::shuffle(order.begin(), order.end(), rng);
      VertexSet s;
      for (int v : order)
        if (std::none_of(s.begin(), s.end(), [&](int u) { return g.adjacent(u, v); })) s.push_back(v);
      std::sort(s.begin(), s.end());
      for (const VertexSet& bag : r.bags()) {
        VertexSet rest;
        for (int v : bag)
          if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(v);
        bool ok = rest.empty() ? bag.size() == 1 : oracle::induces_connected(g, rest);
        if (!ok) o.fail("B - S property fails, seed " + std::to_string(seed));
      }
      ++sets;
    }
    ++instances;
  }
  if (o.pass) o.note = std::to_string(instances) + " instances, " + std::to_string(sets) + " simplicial sets";
  return o;
}

Outcome generator_fidelity() {
  Outcome o;
  Instance a = gen_lower_general(4, 15, 9);
  if (a.graph.vertex_count() != 100) o.fail("lower_general(4,15,9) vertex count");
  if (max_degree(a.graph) > 15) o.fail("lower_general(4,15,9) degree");
  ChordalityResult ca = is_chordal(a.graph);
  if (!ca.chordal) o.fail("lower_general(4,15,9) not chordal");
  else if (clique_tree_from_peo(a.graph, *ca.peo).width() != 7) o.fail("lower_general(4,15,9) tw");
  Instance b = gen_lower_tw2(13);
  if (b.graph.vertex_count() != 74) o.fail("lower_tw2(13) vertex count");
  if (max_degree(b.graph) != 13) o.fail("lower_tw2(13) degree");
  if (treewidth_exact(b.graph).width != 2) o.fail("lower_tw2(13) tw");
  if (oracle::brute_has_clique(b.graph, 4)) o.fail("lower_tw2(13) has a K4");
  if (o.pass) o.note = "100 vertices, Δ<=15, tw 7; 74 vertices, Δ=13, tw 2, K4-free";
  return o;
}

Outcome threshold_arithmetic() {
  using Big = boost::multiprecision::cpp_bin_float_100;
  Outcome o;
  const QuadNum g = gamma_const();
  const QuadNum a = alpha_const();
  if (QuadNum(2) * a - QuadNum(1) != g) o.fail("2α-1 != γ");
  if ((a - QuadNum(1)) * (g + QuadNum(1)) != g) o.fail("(α-1)(γ+1) != γ");
  if (QuadNum(3) * g * g != QuadNum(Rational(9), Rational(6))) o.fail("3γ² != 9+6√2");
  const Big gamma = 1 + boost::multiprecision::sqrt(Big(2));
  int compared = 0;
  int skipped = 0;
  auto near_integer = [](const Big& x) {
    Big frac = x - boost::multiprecision::floor(x);
    return frac < Big("1e-9") || frac > 1 - Big("1e-9");
  };
  for (int k = 1; k <= 10; ++k)
    for (int delta = 1; delta <= 30; ++delta) {
      Big lo = (gamma + 1) * (k + 1);
      Big hi = 3 * (gamma + 1) * (k + 1) * delta;
      Big l3 = gamma * (k + 1) * (3 * gamma * delta - 1);
      if (near_integer(lo) || near_integer(hi) || near_integer(l3)) {
        ++skipped;
        continue;
      }
      auto to64 = [](const Big& x) { return static_cast<std::int64_t>(x); };
      if (anchor_lower(k).ceil() != to64(boost::multiprecision::ceil(lo))) o.fail("ceil window, k=" + std::to_string(k));
      if (anchor_upper(k, delta).floor() != to64(boost::multiprecision::floor(hi))) o.fail("floor window, k=" + std::to_string(k));
      if (lemma3_width_bound(k, delta).ceil() != to64(boost::multiprecision::ceil(l3))) o.fail("lemma3 ceiling");
      ++compared;
    }
  if (o.pass) o.note = "identities exact; " + std::to_string(compared) + " windows match, " + std::to_string(skipped) + " near-integer skipped";
  return o;
}

int run(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome theorem1_report(const std::string& cli, const std::string& dir) {
  Outcome o;
  std::string csv = dir + "/acceptance_suite_a.csv";
  int code = run("'" + cli + "' experiment --suite lemma3 --jobs 4 -o '" + csv + "'");
  if (code != 0) o.fail("experiment exited " + std::to_string(code));
  std::string text = slurp(csv);
  std::string header = text.substr(0, text.find('\n'));
  std::vector<std::string> cols;
  std::stringstream hs(header);
  for (std::string c; std::getline(hs, c, ',');) cols.push_back(c);
  auto it = std::find(cols.begin(), cols.end(), "theorem1_ok");
  if (it == cols.end()) {
    o.fail("no theorem1_ok column");
    return o;
  }
  std::size_t col = static_cast<std::size_t>(it - cols.begin());
  int rows = 0;
  int violated = 0;
  std::stringstream body(text.substr(text.find('\n') + 1));
  for (std::string line; std::getline(body, line);) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) f.push_back(c);
    if (f.size() <= col) f.resize(col + 1);
    violated += f[col] == "false";
    ++rows;
  }
  if (rows == 0) o.fail("no rows");
  if (o.pass) o.note = std::to_string(rows) + " rows, theorem1_ok=false on " + std::to_string(violated) + ", exit 0";
  return o;
}

Outcome determinism(const std::string& cli, const std::string& dir) {
  Outcome o;
  std::string a = dir + "/acceptance_suite_a.csv";
  std::string b = dir + "/acceptance_suite_b.csv";
  int code = run("'" + cli + "' experiment --suite lemma3 --jobs 1 -o '" + b + "'");
  if (code != 0) o.fail("rerun exited " + std::to_string(code));
  std::string first = slurp(a);
  if (first.empty()) o.fail("first run missing");
  if (first != slurp(b)) o.fail("CSV differs between runs");
  if (o.pass) o.note = "byte-identical (" + std::to_string(first.size()) + " bytes, 4 threads vs 1)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string dir = ".";
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    if (std::string(argv[i]) == "--workdir") dir = argv[i + 1];
  }
  if (cli.empty()) {
    std::cerr << "usage: acceptance --cli <tpw executable> [--workdir DIR]\n";
    return 2;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle correctness", oracle_correctness},
      {2, "Seese invariant", seese_invariant},
      {3, "chordal upper bound", chordal_bound},
      {4, "Lemma 3 guarantee", lemma3_guarantee},
      {5, "separator contract", separator_contract},
      {6, "Lemma 2 refinement", refinement},
      {7, "generator fidelity", generator_fidelity},
      {8, "exact-threshold arithmetic", threshold_arithmetic},
      {9, "report-only Theorem 1 column", [&] { return theorem1_report(cli, dir); }},
      {10, "determinism", [&] { return determinism(cli, dir); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.note << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

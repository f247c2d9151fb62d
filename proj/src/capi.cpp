#include "tpw/tpw.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "tpw/bounds.hpp"
#include "tpw/chordal.hpp"
#include "tpw/construct.hpp"
#include "tpw/errors.hpp"
#include "tpw/io.hpp"

struct tpw_graph {
  tpw::Instance inst;
};
struct tpw_td {
  tpw::TreeDecomposition td;
  int n = 0;
};
struct tpw_tp {
  tpw::TreePartition tp;
};

namespace {

thread_local std::string last_error;

tpw_status fail(tpw_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

// Maps the library's exception kinds onto status codes.
template <class F>
tpw_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const tpw::InputError& e) {
    return fail(TPW_ERR_INPUT, e.what());
  } catch (const tpw::CapacityError& e) {
    return fail(TPW_ERR_CAPACITY, e.what());
  } catch (const tpw::ContractError& e) {
    return fail(TPW_ERR_CONTRACT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TPW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TPW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TPW_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw tpw::InputError(std::string(what) + " is NULL");
}

tpw::FamilyParams parse_params(const char* text) {
  tpw::FamilyParams params;
  if (text == nullptr) return params;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw tpw::InputError("parameter '" + tok + "' is not key=value");
    tpw::Rational v = tpw::parse_rational(tok.substr(eq + 1));
    if (v.den() != 1) throw tpw::InputError("parameter '" + tok + "' is not an integer");
    params[tok.substr(0, eq)] = v.num();
  }
  return params;
}

tpw::ExactTpwOptions to_options(const tpw_exact_options* o) {
  tpw::ExactTpwOptions opts;
  if (o != nullptr) {
    opts.max_n = o->max_n;
    opts.node_limit = o->node_limit;
    opts.time_budget_ms = o->time_budget_ms;
    opts.chordal_pruning = o->chordal_pruning != 0;
  }
  return opts;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* tpw_last_error(void) { return last_error.c_str(); }
void tpw_string_free(char* s) { delete[] s; }
const char* tpw_version(void) { return "0.1.0"; }

tpw_status tpw_graph_create(int n, const int* edges, size_t m, tpw_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (m > 0) require(edges, "edges");
    if (n < 0) throw tpw::InputError("negative vertex count");
    std::vector<tpw::Edge> list(m);
    for (size_t i = 0; i < m; ++i) list[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = new tpw_graph{{tpw::Graph::from_edges(n, list), {}}};
    return TPW_OK;
  });
}

tpw_status tpw_graph_read(const char* text, tpw_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(text);
    *out = new tpw_graph{tpw::read_graph(in)};
    return TPW_OK;
  });
}

tpw_status tpw_graph_write(const tpw_graph* g, tpw_format format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    std::ostringstream s;
    if (format == TPW_FORMAT_DOT)
      tpw::write_dot(s, g->inst.graph, &g->inst.meta);
    else
      tpw::write_graph(s, g->inst.graph, &g->inst.meta);
    *out = dup_string(s.str());
    return TPW_OK;
  });
}

tpw_status tpw_graph_generate(const char* family, const char* params, uint64_t seed, tpw_graph** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = new tpw_graph{tpw::gen_family(family, parse_params(params), seed)};
    return TPW_OK;
  });
}

int tpw_graph_vertex_count(const tpw_graph* g) { return g ? g->inst.graph.vertex_count() : 0; }
size_t tpw_graph_edge_count(const tpw_graph* g) { return g ? g->inst.graph.edge_count() : 0; }
int tpw_graph_max_degree(const tpw_graph* g) { return g ? tpw::max_degree(g->inst.graph) : 0; }

tpw_status tpw_graph_is_chordal(const tpw_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = tpw::is_chordal(g->inst.graph).chordal ? 1 : 0;
    return TPW_OK;
  });
}

void tpw_graph_free(tpw_graph* g) { delete g; }

tpw_status tpw_td_read(const char* text, tpw_td** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(text);
    auto [td, n] = tpw::read_decomposition(in);
    *out = new tpw_td{std::move(td), n};
    return TPW_OK;
  });
}

tpw_status tpw_td_write(const tpw_td* td, char** out) {
  return guarded([&] {
    require(td, "decomposition");
    require(out, "out");
    *out = dup_string(tpw::to_string(td->td, td->n));
    return TPW_OK;
  });
}

int tpw_td_width(const tpw_td* td) { return td ? td->td.width() : -1; }

tpw_status tpw_td_exact(const tpw_graph* g, tpw_td** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    auto r = tpw::treewidth_exact(g->inst.graph);
    *out = new tpw_td{std::move(r.decomposition), g->inst.graph.vertex_count()};
    return TPW_OK;
  });
}

tpw_status tpw_td_heuristic(const tpw_graph* g, tpw_td** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new tpw_td{tpw::treewidth_heuristic(g->inst.graph), g->inst.graph.vertex_count()};
    return TPW_OK;
  });
}

tpw_status tpw_td_verify(const tpw_graph* g, const tpw_td* td) {
  return guarded([&] {
    require(g, "graph");
    require(td, "decomposition");
    if (td->n != g->inst.graph.vertex_count())
      return fail(TPW_VIOLATION, "structure: decomposition is for " + std::to_string(td->n) + " vertices, graph has " +
                                     std::to_string(g->inst.graph.vertex_count()));
    auto v = tpw::verify_tree_decomposition(g->inst.graph, td->td);
    if (!v) return fail(TPW_VIOLATION, v.axiom + ": " + v.detail);
    return TPW_OK;
  });
}

void tpw_td_free(tpw_td* td) { delete td; }

tpw_status tpw_tp_read(const char* text, tpw_tp** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(text);
    *out = new tpw_tp{tpw::read_partition(in)};
    return TPW_OK;
  });
}

tpw_status tpw_tp_write(const tpw_tp* tp, char** out) {
  return guarded([&] {
    require(tp, "partition");
    require(out, "out");
    *out = dup_string(tpw::to_string(tp->tp));
    return TPW_OK;
  });
}

int tpw_tp_width(const tpw_tp* tp) { return tp ? tp->tp.width() : 0; }
int tpw_tp_bag_count(const tpw_tp* tp) { return tp ? tp->tp.bag_count() : 0; }

tpw_status tpw_tp_verify(const tpw_graph* g, const tpw_tp* tp) {
  return guarded([&] {
    require(g, "graph");
    require(tp, "partition");
    if (tp->tp.vertex_count() != g->inst.graph.vertex_count())
      return fail(TPW_VIOLATION, "partition covers " + std::to_string(tp->tp.vertex_count()) +
                                     " vertices, graph has " + std::to_string(g->inst.graph.vertex_count()));
    auto v = tpw::verify_tree_partition(g->inst.graph, tp->tp);
    if (!v) return fail(TPW_VIOLATION, v.detail);
    return TPW_OK;
  });
}

void tpw_tp_free(tpw_tp* tp) { delete tp; }

tpw_status tpw_construct(const tpw_graph* g, const tpw_td* td, int delta, tpw_tp** out, char** trace) {
  return guarded([&] {
    require(g, "graph");
    require(td, "decomposition");
    require(out, "out");
    const tpw::Graph& graph = g->inst.graph;
    if (td->n != graph.vertex_count()) throw tpw::InputError("decomposition and graph disagree on the vertex count");
    int d = delta > 0 ? delta : std::max(1, tpw::max_degree(graph));
    tpw::ConstructOptions opts;
    opts.trace = trace != nullptr;
    auto r = tpw::construct_tree_partition(graph, td->td, d, opts);
    *out = new tpw_tp{std::move(r.partition)};
    if (trace != nullptr) *trace = dup_string(tpw::trace_to_jsonl(r.trace));
    return TPW_OK;
  });
}

void tpw_exact_options_init(tpw_exact_options* opts) {
  if (opts == nullptr) return;
  tpw::ExactTpwOptions d;
  opts->max_n = d.max_n;
  opts->node_limit = d.node_limit;
  opts->time_budget_ms = d.time_budget_ms;
  opts->chordal_pruning = d.chordal_pruning ? 1 : 0;
}

tpw_status tpw_exact(const tpw_graph* g, const tpw_exact_options* opts, tpw_exact_result* result,
                     tpw_tp** witness) {
  return guarded([&] {
    require(g, "graph");
    require(result, "result");
    const tpw::Graph& graph = g->inst.graph;
    tpw::ExactTpwOptions o = to_options(opts);
    *result = {0, 0, 1, 0};
    std::vector<int> assignment(static_cast<std::size_t>(graph.vertex_count()), 0);
    int bag_offset = 0;
    for (const tpw::VertexSet& comp : tpw::connected_components(graph)) {
      tpw::Subgraph sub = tpw::induced_subgraph(graph, comp);
      tpw::ExactTpwResult r = tpw::exact_tpw(sub.graph, o);
      result->lower_bound = std::max(result->lower_bound, r.lower_bound);
      result->upper_bound = std::max(result->upper_bound, r.upper_bound());
      result->complete = result->complete && r.complete;
      result->nodes += r.nodes;
      for (int v = 0; v < sub.graph.vertex_count(); ++v)
        assignment[static_cast<std::size_t>(sub.to_parent[static_cast<std::size_t>(v)])] =
            bag_offset + r.witness.bag_of(v);
      bag_offset += r.witness.bag_count();
    }
    if (witness != nullptr) *witness = new tpw_tp{tpw::TreePartition::from_assignment(std::move(assignment))};
    return TPW_OK;
  });
}

tpw_status tpw_refine(const tpw_graph* g, const tpw_tp* tp, tpw_tp** out) {
  return guarded([&] {
    require(g, "graph");
    require(tp, "partition");
    require(out, "out");
    *out = new tpw_tp{tpw::refine_connected(g->inst.graph, tp->tp)};
    return TPW_OK;
  });
}

const char* tpw_csv_header(void) {
  static const std::string header = tpw::csv_header();
  return header.c_str();
}

tpw_status tpw_audit(const tpw_graph* g, const tpw_exact_options* opts, char** csv_row, char** messages) {
  return guarded([&] {
    require(g, "graph");
    tpw::AuditOptions a;
    if (opts != nullptr) {
      a.max_n = opts->max_n;
      a.node_limit = opts->node_limit;
      a.time_budget_ms = opts->time_budget_ms;
    }
    tpw::BoundReport r = tpw::audit(g->inst.graph, g->inst.meta, a);
    if (csv_row != nullptr) *csv_row = dup_string(tpw::csv_row(r));
    if (messages != nullptr) *messages = dup_string(join_lines(r.violations));
    if (!r.asserted_ok()) return fail(TPW_VIOLATION, r.violations.front());
    return TPW_OK;
  });
}

tpw_status tpw_experiment(const char* plan_text, const char* suite, const tpw_exact_options* overrides, int jobs,
                          char** csv, char** messages) {
  return guarded([&] {
    require(csv, "csv");
    tpw::ExperimentPlan plan;
    if (plan_text != nullptr) {
      std::istringstream in(plan_text);
      plan = tpw::parse_plan(in);
    } else {
      require(suite, "suite");
      plan = tpw::builtin_plan(suite);
    }
    if (overrides != nullptr) {
      if (overrides->max_n > 0) plan.options.max_n = overrides->max_n;
      if (overrides->node_limit > 0) plan.options.node_limit = overrides->node_limit;
      if (overrides->time_budget_ms > 0) plan.options.time_budget_ms = overrides->time_budget_ms;
    }
    tpw::ExperimentResult r = tpw::run_experiment(plan, jobs);
    *csv = dup_string(r.csv);
    if (messages != nullptr) *messages = dup_string(join_lines(r.messages));
    if (r.violated_instances > 0)
      return fail(TPW_VIOLATION, std::to_string(r.violated_instances) + " instance(s) violate an asserted bound");
    return TPW_OK;
  });
}

tpw_status tpw_lemma3_bound(int k, int delta, char** exact_text, int64_t* ceiling) {
  return guarded([&] {
    if (k < 1 || delta < 1) throw tpw::InputError("need k >= 1 and delta >= 1");
    tpw::QuadNum b = tpw::lemma3_width_bound(k, delta);
    if (exact_text != nullptr) *exact_text = dup_string(b.str());
    if (ceiling != nullptr) *ceiling = b.ceil();
    return TPW_OK;
  });
}

}  // extern "C"

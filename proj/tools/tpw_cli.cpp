// Command-line front end. Talks to the library only through tpw.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tpw/tpw.h"

namespace {

enum Exit { kOk = 0, kViolation = 1, kInput = 2, kCapacity = 3 };

int exit_for(tpw_status s) {
  switch (s) {
    case TPW_OK: return kOk;
    case TPW_ERR_INPUT: return kInput;
    case TPW_ERR_CAPACITY: return kCapacity;
    default: return kViolation;
  }
}

struct Failure {
  int code;
};

void check(tpw_status s, const std::string& what) {
  if (s == TPW_OK) return;
  std::cerr << "tpw: " << what << ": " << tpw_last_error() << '\n';
  throw Failure{exit_for(s)};
}

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "tpw: cannot read " << path << '\n';
    throw Failure{kInput};
  }
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "tpw: cannot write " << path << '\n';
    throw Failure{kInput};
  }
}

// Owns a library-allocated string.
struct CStr {
  char* p = nullptr;
  ~CStr() { tpw_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using GraphH = Handle<tpw_graph, tpw_graph_free>;
using TdH = Handle<tpw_td, tpw_td_free>;
using TpH = Handle<tpw_tp, tpw_tp_free>;

void load_graph(const std::string& path, GraphH& g) {
  check(tpw_graph_read(slurp(path).c_str(), &g.p), path);
}

struct Budget {
  int max_n = 0;
  std::uint64_t nodes = 0;
  std::uint64_t ms = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-n", max_n, "largest graph searched without a budget")->check(CLI::PositiveNumber);
    cmd->add_option("--budget-nodes", nodes, "search-node budget per component (reproducible)");
    cmd->add_option("--budget-ms", ms, "wall-clock budget per component in milliseconds");
  }
  tpw_exact_options options(bool keep_defaults) const {
    tpw_exact_options o;
    if (keep_defaults) {
      tpw_exact_options_init(&o);
    } else {
      o = {0, 0, 0, 0};
    }
    if (max_n > 0) o.max_n = max_n;
    if (nodes > 0) o.node_limit = nodes;
    if (ms > 0) o.time_budget_ms = ms;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-partitions of bounded-degree graphs of bounded tree-width"};
  app.require_subcommand(1);
  std::string out_path;
  std::string format = "text";

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  gen->add_option("family", family, "path|cycle|clique|wheel|random_ktree|random_tree|random_connected|"
                                    "grid_h|lower_general|lower_tw2")->required();
  gen->add_option("params", params, "key=value parameters");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}));
  gen->add_option("-o,--output", out_path, "output file");

  // tdecomp
  auto* tdecomp = app.add_subcommand("tdecomp", "tree decomposition of a graph");
  std::string graph_path;
  bool heuristic = false;
  tdecomp->add_option("graph", graph_path, "graph file")->required();
  tdecomp->add_flag("--heuristic", heuristic, "min-fill instead of exact (exact is capped at 16 vertices "
                                              "unless the graph is chordal)");
  tdecomp->add_option("-o,--output", out_path, "output file");

  // construct
  auto* construct = app.add_subcommand("construct", "bounded-width tree-partition");
  std::string td_path;
  std::string trace_path;
  int delta = 0;
  construct->add_option("graph", graph_path, "graph file")->required();
  construct->add_option("--td", td_path, "tree decomposition (computed when omitted)");
  construct->add_option("--delta", delta, "degree bound (default: maximum degree)");
  construct->add_option("--trace", trace_path, "write the recursion trace as JSON lines ('-' for stderr)")
      ->expected(0, 1)
      ->default_str("-");
  construct->add_option("-o,--output", out_path, "output file");

  // exact
  auto* exact = app.add_subcommand("exact", "exact tree-partition-width");
  Budget budget;
  bool pruning = false;
  exact->add_option("graph", graph_path, "graph file")->required();
  budget.attach(exact);
  exact->add_flag("--chordal-pruning", pruning, "search connected bags only (chordal graphs)");
  exact->add_option("-o,--output", out_path, "witness partition file");

  // verify
  auto* verify = app.add_subcommand("verify", "check a decomposition or partition");
  std::string tp_path;
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("--td", td_path, "tree decomposition file");
  verify->add_option("--tp", tp_path, "tree-partition file");

  // audit
  auto* audit = app.add_subcommand("audit", "all bounds for one instance");
  audit->add_option("graph", graph_path, "graph file")->required();
  budget.attach(audit);
  audit->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  audit->add_option("-o,--output", out_path, "output file");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "audit every instance of a plan");
  std::string plan_path;
  std::string suite;
  int jobs = 1;
  auto* plan_opt = experiment->add_option("--plan", plan_path, "plan file");
  experiment->add_option("--suite", suite, "built-in plan (lemma3)")->excludes(plan_opt);
  budget.attach(experiment);
  experiment->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  experiment->add_option("-o,--output", out_path, "CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*gen) {
      std::string joined;
      for (const auto& p : params) joined += p + " ";
      GraphH g;
      check(tpw_graph_generate(family.c_str(), joined.c_str(), seed, &g.p), "gen");
      CStr text;
      check(tpw_graph_write(g.p, format == "dot" ? TPW_FORMAT_DOT : TPW_FORMAT_TEXT, &text.p), "gen");
      emit(out_path, text.str());
      return kOk;
    }

    if (*experiment) {
      std::string plan_text;
      if (!plan_path.empty()) plan_text = slurp(plan_path);
      else if (suite.empty()) suite = "lemma3";
      tpw_exact_options o = budget.options(false);
      CStr csv;
      CStr messages;
      tpw_status s = tpw_experiment(plan_path.empty() ? nullptr : plan_text.c_str(), suite.c_str(), &o, jobs, &csv.p,
                                    &messages.p);
      if (s != TPW_OK && s != TPW_VIOLATION) check(s, "experiment");
      emit(out_path, csv.str());
      std::cerr << messages.str();
      if (s == TPW_VIOLATION) std::cerr << "tpw: " << tpw_last_error() << '\n';
      return s == TPW_OK ? kOk : kViolation;
    }

    GraphH g;
    load_graph(graph_path, g);

    if (*tdecomp) {
      TdH td;
      check(heuristic ? tpw_td_heuristic(g.p, &td.p) : tpw_td_exact(g.p, &td.p), "tdecomp");
      CStr text;
      check(tpw_td_write(td.p, &text.p), "tdecomp");
      emit(out_path, text.str());
      return kOk;
    }

    if (*construct) {
      TdH td;
      if (!td_path.empty()) {
        check(tpw_td_read(slurp(td_path).c_str(), &td.p), td_path);
      } else {
        tpw_status s = tpw_td_exact(g.p, &td.p);
        if (s == TPW_ERR_CAPACITY) s = tpw_td_heuristic(g.p, &td.p);
        check(s, "tree decomposition");
      }
      TpH tp;
      CStr trace;
      const bool tracing = construct->count("--trace") > 0;
      check(tpw_construct(g.p, td.p, delta, &tp.p, tracing ? &trace.p : nullptr), "construct");
      if (tracing) {
        if (trace_path.empty() || trace_path == "-")
          std::cerr << trace.str();
        else
          emit(trace_path, trace.str());
      }
      CStr text;
      check(tpw_tp_write(tp.p, &text.p), "construct");
      emit(out_path, text.str());
      return kOk;
    }

    if (*exact) {
      tpw_exact_options o = budget.options(true);
      o.chordal_pruning = pruning ? 1 : 0;
      tpw_exact_result r;
      TpH tp;
      check(tpw_exact(g.p, &o, &r, &tp.p), "exact");
      CStr text;
      check(tpw_tp_write(tp.p, &text.p), "exact");
      emit(out_path, text.str());
      if (r.complete) {
        std::cerr << "tpw = " << r.lower_bound << " (" << r.nodes << " nodes)\n";
        return kOk;
      }
      std::cerr << "budget exhausted: " << r.lower_bound << " <= tpw <= " << r.upper_bound << " (" << r.nodes
                << " nodes)\n";
      return kCapacity;
    }

    if (*verify) {
      if (td_path.empty() && tp_path.empty()) {
        std::cerr << "tpw: verify needs --td or --tp\n";
        return kInput;
      }
      int code = kOk;
      if (!td_path.empty()) {
        TdH td;
        check(tpw_td_read(slurp(td_path).c_str(), &td.p), td_path);
        tpw_status s = tpw_td_verify(g.p, td.p);
        if (s == TPW_OK) {
          std::cout << "td: valid, width " << tpw_td_width(td.p) << '\n';
        } else if (s == TPW_VIOLATION) {
          std::cout << "td: INVALID (" << tpw_last_error() << ")\n";
          code = kViolation;
        } else {
          check(s, "verify");
        }
      }
      if (!tp_path.empty()) {
        TpH tp;
        check(tpw_tp_read(slurp(tp_path).c_str(), &tp.p), tp_path);
        tpw_status s = tpw_tp_verify(g.p, tp.p);
        if (s == TPW_OK) {
          std::cout << "tp: valid, width " << tpw_tp_width(tp.p) << ", " << tpw_tp_bag_count(tp.p) << " bags\n";
        } else if (s == TPW_VIOLATION) {
          std::cout << "tp: INVALID (" << tpw_last_error() << ")\n";
          code = kViolation;
        } else {
          check(s, "verify");
        }
      }
      return code;
    }

    if (*audit) {
      tpw_exact_options o = budget.options(true);
      CStr row;
      CStr messages;
      tpw_status s = tpw_audit(g.p, &o, &row.p, &messages.p);
      if (s != TPW_OK && s != TPW_VIOLATION) check(s, "audit");
      std::string header = tpw_csv_header();
      std::string out;
      if (format == "csv") {
        out = header + "\n" + row.str() + "\n";
      } else {
        std::istringstream hs(header);
        std::istringstream rs(row.str() + ",");
        std::string key;
        std::string value;
        while (std::getline(hs, key, ',') && std::getline(rs, value, ','))
          out += key + ": " + (value.empty() ? "-" : value) + "\n";
      }
      emit(out_path, out);
      std::cerr << messages.str();
      return s == TPW_OK ? kOk : kViolation;
    }
  } catch (const Failure& f) {
    return f.code;
  }

  return kOk;
}

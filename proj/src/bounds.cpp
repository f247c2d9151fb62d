#include "tpw/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <sstream>
#include <thread>

#include "tpw/chordal.hpp"
#include "tpw/construct.hpp"
#include "tpw/decomposition.hpp"
#include "tpw/errors.hpp"
#include "tpw/io.hpp"
#include "tpw/partition.hpp"

namespace tpw {

BoundFormulas bound_formulas(int tw, int delta, bool chordal) {
  if (tw < 1 || delta < 1)
    throw InputError("bound formulas need tw >= 1 and delta >= 1 (got tw=" + std::to_string(tw) +
                     ", delta=" + std::to_string(delta) + ")");
  BoundFormulas f;
  f.seese_lower = Rational((tw + 2) / 2);
  if (tw >= 3) f.referee = Rational(24) * Rational(tw) * Rational(delta);
  f.theorem1 = Rational(5, 2) * Rational(tw + 1) * (Rational(7, 2) * Rational(delta) - Rational(1));
  f.lemma3 = lemma3_width_bound(tw, delta);
  if (chordal && delta >= 2) f.chordal = Rational(tw) * Rational(delta - 1);
  return f;
}

Theorem2Params theorem2_params(int k, Rational eps) {
  if (k < 3) throw InputError("Theorem 2 needs k >= 3 (got " + std::to_string(k) + ")");
  if (eps.sign() <= 0 || eps >= Rational(1, 8))
    throw InputError("eps must lie strictly between 0 and 1/8 (got " + eps.str() + ")");
  Theorem2Params p;
  p.ell = (k + 1) / 2;
  p.delta_threshold = std::max(Rational(3 * p.ell + 1), Rational(3 * p.ell) / (Rational(8) * eps));
  p.lower_coefficient = Rational(1, 8) - eps;
  return p;
}

namespace {

struct TwChoice {
  int width;
  bool exact;
  TreeDecomposition td;
};

TwChoice choose_treewidth(const Graph& g, bool chordal) {
  if (chordal || g.vertex_count() <= kTreewidthExactMaxN) {
    TreewidthResult r = treewidth_exact(g);
    return {r.width, true, std::move(r.decomposition)};
  }
  TreeDecomposition td = treewidth_heuristic(g);
  int w = td.width();
  return {w, false, std::move(td)};
}

void run_exact(const Graph& g, const AuditOptions& opts, BoundReport& r) {
  ExactTpwOptions eo;
  eo.max_n = opts.max_n;
  eo.node_limit = opts.node_limit;
  eo.time_budget_ms = opts.time_budget_ms;
  eo.chordal_pruning = r.chordal;
  bool complete = true;
  for (const VertexSet& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    ExactTpwResult res;
    try {
      res = exact_tpw(sub.graph, eo);
    } catch (const CapacityError&) {
      r.exact_status = ExactStatus::kNotComputed;
      return;
    }
    complete = complete && res.complete;
    r.exact_lower = std::max(r.exact_lower, res.lower_bound);
    r.exact_upper = std::max(r.exact_upper, res.upper_bound());
    r.exact_nodes += res.nodes;
  }
  r.exact_status = complete ? ExactStatus::kExact : ExactStatus::kLowerBound;
}

struct Bound {
  Rational value;
  std::string name;
};

void evaluate(BoundReport& r) {
  const bool exact_known = r.exact_status != ExactStatus::kNotComputed;
  std::vector<Bound> lowers;
  std::vector<Bound> uppers;
  if (r.family_lower) lowers.push_back({*r.family_lower, "family_lower"});
  if (exact_known) lowers.push_back({Rational(r.exact_lower), "exact_lower"});
  if (exact_known) uppers.push_back({Rational(r.exact_upper), "exact_witness"});
  if (r.constructed_width) uppers.push_back({Rational(*r.constructed_width), "constructed"});
  if (r.family_upper) uppers.push_back({*r.family_upper, "family_upper"});
  const std::int64_t ceiling = r.formulas.lemma3.ceil();

  auto fail = [&r](const std::string& what) { r.violations.push_back(what); };

  // Sandwich: every certified lower bound sits below every upper bound, and
  // the construction respects the lemma 3 ceiling.
  r.sandwich = Check::kHolds;
  for (const Bound& lo : lowers)
    for (const Bound& up : uppers)
      if (lo.value > up.value) {
        r.sandwich = Check::kViolated;
        fail("sandwich: " + lo.name + " " + lo.value.str() + " > " + up.name + " " + up.value.str());
      }
  if (!r.constructed_width) {
    r.sandwich = Check::kViolated;
  } else if (*r.constructed_width > ceiling) {
    r.sandwich = Check::kViolated;
    fail("sandwich: constructed " + std::to_string(*r.constructed_width) + " > lemma3 ceiling " +
         std::to_string(ceiling));
  }

  if (r.tw_exact && !uppers.empty()) {
    r.seese = Check::kHolds;
    Rational seese((r.tw + 2) / 2);
    for (const Bound& up : uppers)
      if (up.value < seese) {
        r.seese = Check::kViolated;
        fail("seese: " + up.name + " " + up.value.str() + " < " + seese.str());
      }
  }

  if (r.formulas.chordal && !lowers.empty()) {
    r.chordal_bound = Check::kHolds;
    for (const Bound& lo : lowers)
      if (lo.value > *r.formulas.chordal) {
        r.chordal_bound = Check::kViolated;
        fail("chordal: " + lo.name + " " + lo.value.str() + " > " + r.formulas.chordal->str());
      }
  }

  if (r.constructed_width) {
    r.theorem1 = Rational(*r.constructed_width) < r.formulas.theorem1 ? Check::kHolds : Check::kViolated;
  }
}

std::string opt_int(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_rat(const std::optional<Rational>& v) { return v ? v->str() : ""; }
std::string check_text(Check c) {
  switch (c) {
    case Check::kHolds: return "true";
    case Check::kViolated: return "false";
    default: return "";
  }
}
std::string status_text(ExactStatus s) {
  switch (s) {
    case ExactStatus::kExact: return "exact";
    case ExactStatus::kLowerBound: return "lower_bound";
    default: return "not_computed";
  }
}

}  // namespace

BoundReport audit(const Graph& g, const InstanceMeta& meta, const AuditOptions& opts) {
  BoundReport r;
  r.family = meta.family;
  r.k = meta.param("k");
  r.n = meta.param("n");
  r.vertices = g.vertex_count();
  r.delta = std::max(1, max_degree(g));
  r.chordal = is_chordal(g).chordal;
  TwChoice tw = choose_treewidth(g, r.chordal);
  r.tw = tw.width;
  r.tw_exact = tw.exact;
  r.formulas = bound_formulas(std::max(1, r.tw), r.delta, r.chordal);
  r.family_lower = meta.claimed_tpw_lower;
  r.family_upper = meta.claimed_tpw_upper;

  try {
    ConstructResult c = construct_tree_partition(g, tw.td, r.delta);
    r.constructed_width = c.partition.width();
    r.lemma3 = Check::kHolds;
  } catch (const ContractError& e) {
    r.lemma3 = Check::kViolated;
    r.violations.push_back(std::string("lemma3: ") + e.what());
  }

  run_exact(g, opts, r);
  evaluate(r);
  return r;
}

std::string csv_header() {
  return "family,k,delta,n,vertices,tw,exact_tpw,exact_status,constructed_width,seese_lower,family_lower,"
         "chordal_upper,referee_upper,theorem1_upper,lemma3_upper_ceiling,sandwich_ok,theorem1_ok";
}

std::string csv_row(const BoundReport& r) {
  std::ostringstream out;
  const bool exact_known = r.exact_status != ExactStatus::kNotComputed;
  out << r.family << ',' << opt_int(r.k) << ',' << r.delta << ',' << opt_int(r.n) << ',' << r.vertices << ','
      << r.tw << ',' << (exact_known ? std::to_string(r.exact_lower) : "") << ',' << status_text(r.exact_status)
      << ',' << (r.constructed_width ? std::to_string(*r.constructed_width) : "") << ','
      << (r.tw_exact ? r.formulas.seese_lower.str() : "") << ',' << opt_rat(r.family_lower) << ','
      << opt_rat(r.formulas.chordal) << ',' << opt_rat(r.formulas.referee) << ',' << r.formulas.theorem1.str()
      << ',' << r.formulas.lemma3.ceil() << ',' << check_text(r.sandwich) << ',' << check_text(r.theorem1);
  return out.str();
}

ExperimentPlan parse_plan(std::istream& in) {
  ExperimentPlan plan;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    auto where = [&] { return "plan line " + std::to_string(line_no) + ": "; };
    std::vector<std::pair<std::string, std::int64_t>> kv;
    std::string tok;
    while (ss >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) throw InputError(where() + "expected key=value, got '" + tok + "'");
      std::int64_t value = 0;
      try {
        Rational r = parse_rational(tok.substr(eq + 1));
        if (r.den() != 1) throw InputError("");
        value = r.num();
      } catch (const InputError&) {
        throw InputError(where() + "value of '" + tok.substr(0, eq) + "' is not an integer");
      }
      kv.emplace_back(tok.substr(0, eq), value);
    }
    if (head == "budget") {
      for (const auto& [key, value] : kv) {
        if (value < 0) throw InputError(where() + "budget values must be non-negative");
        if (key == "nodes") plan.options.node_limit = static_cast<std::uint64_t>(value);
        else if (key == "ms") plan.options.time_budget_ms = static_cast<std::uint64_t>(value);
        else if (key == "max_n") plan.options.max_n = static_cast<int>(value);
        else throw InputError(where() + "unknown budget key '" + key + "'");
      }
      continue;
    }
    PlanEntry e;
    e.family = head;
    e.line = line_no;
    for (const auto& [key, value] : kv) {
      if (key == "seed") {
        if (value < 0) throw InputError(where() + "seed must be non-negative");
        e.seed = static_cast<std::uint64_t>(value);
      } else if (!e.params.emplace(key, value).second) {
        throw InputError(where() + "duplicate parameter '" + key + "'");
      }
    }
    plan.entries.push_back(std::move(e));
  }
  return plan;
}

std::vector<std::string> builtin_plan_names() { return {"lemma3"}; }

ExperimentPlan builtin_plan(const std::string& name) {
  if (name != "lemma3") throw InputError("unknown suite '" + name + "'");
  ExperimentPlan plan;
  plan.options.node_limit = 2000000;
  auto add = [&plan](std::string family, FamilyParams params, std::uint64_t seed = 0) {
    plan.entries.push_back({std::move(family), std::move(params), seed, 0});
  };
  for (int n : {1, 2, 5, 17, 40}) add("path", {{"n", n}});
  for (int n : {3, 4, 9, 25, 40}) add("cycle", {{"n", n}});
  for (int i = 0; i < 50; ++i) add("random_ktree", {{"n", 8 + (i * 13) % 53}, {"k", 1 + i % 3}}, 1000 + i);
  add("lower_general", {{"k", 2}, {"delta", 7}, {"n", 3}});
  add("lower_general", {{"k", 4}, {"delta", 15}, {"n", 9}});
  add("lower_tw2", {{"delta", 11}});
  add("lower_tw2", {{"delta", 13}});
  return plan;
}

namespace {

std::string entry_name(const PlanEntry& e, std::size_t index) {
  std::string s = "entry " + std::to_string(index + 1);
  if (e.line > 0) s += " (line " + std::to_string(e.line) + ")";
  return s + " " + e.family;
}

std::vector<Instance> generate_all(const ExperimentPlan& plan) {
  std::vector<Instance> out;
  std::string errors;
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const PlanEntry& e = plan.entries[i];
    try {
      out.push_back(gen_family(e.family, e.params, e.seed));
    } catch (const InputError& err) {
      errors += "\n  " + entry_name(e, i) + ": " + err.what();
    }
  }
  if (!errors.empty()) throw InputError("experiment preflight failed:" + errors);
  return out;
}

}  // namespace

void preflight(const ExperimentPlan& plan) { generate_all(plan); }

ExperimentResult run_experiment(const ExperimentPlan& plan, int jobs) {
  std::vector<Instance> instances = generate_all(plan);
  ExperimentResult res;
  res.reports.resize(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        res.reports[i] = audit(instances[i].graph, instances[i].meta, plan.options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, std::max(1, static_cast<int>(instances.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::ostringstream csv;
  csv << csv_header() << '\n';
  for (std::size_t i = 0; i < res.reports.size(); ++i) {
    const BoundReport& r = res.reports[i];
    csv << csv_row(r) << '\n';
    if (!r.asserted_ok()) {
      ++res.violated_instances;
      for (const auto& v : r.violations) res.messages.push_back(entry_name(plan.entries[i], i) + ": " + v);
    }
  }
  res.csv = csv.str();
  return res;
}

}  // namespace tpw

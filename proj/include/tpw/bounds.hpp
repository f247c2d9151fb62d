#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tpw/generators.hpp"
#include "tpw/graph.hpp"
#include "tpw/quadnum.hpp"

namespace tpw {

/// Closed-form bounds for a graph of tree-width tw and maximum degree delta.
struct BoundFormulas {
  Rational seese_lower;              // ceil((tw+1)/2)
  std::optional<Rational> referee;   // 24 tw delta, tw >= 3 only
  Rational theorem1;                 // (5/2)(tw+1)((7/2)delta - 1)
  QuadNum lemma3;                    // gamma (tw+1)(3 gamma delta - 1)
  std::optional<Rational> chordal;   // tw (delta-1), chordal graphs with delta >= 2
};

/// Throws InputError unless tw >= 1 and delta >= 1.
BoundFormulas bound_formulas(int tw, int delta, bool chordal);

struct Theorem2Params {
  int ell = 0;
  Rational delta_threshold;
  Rational lower_coefficient;
};

/// ell = ceil(k/2), threshold max{3 ell + 1, 3 ell / (8 eps)}, coefficient
/// 1/8 - eps. Requires k >= 3 and 0 < eps < 1/8.
Theorem2Params theorem2_params(int k, Rational eps);

enum class Check { kNotApplicable, kHolds, kViolated };

enum class ExactStatus { kExact, kLowerBound, kNotComputed };

struct AuditOptions {
  int max_n = 12;
  /// Search-node budget per connected component; 0 means none. Node budgets
  /// keep audits reproducible.
  std::uint64_t node_limit = 0;
  /// Wall-clock budget per component; 0 means none.
  std::uint64_t time_budget_ms = 0;
};

struct BoundReport {
  std::string family;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n;
  int vertices = 0;
  int delta = 0;     // max degree, the value used in every formula (at least 1)
  int tw = 0;        // tree-width used in the formulas
  bool tw_exact = false;
  bool chordal = false;

  ExactStatus exact_status = ExactStatus::kNotComputed;
  int exact_lower = 0;   // certified; the optimum when exact
  int exact_upper = 0;   // width of the best partition the search saw
  std::uint64_t exact_nodes = 0;

  std::optional<int> constructed_width;  // unset if the construction failed
  BoundFormulas formulas;
  std::optional<Rational> family_lower;
  std::optional<Rational> family_upper;

  Check sandwich = Check::kNotApplicable;
  Check seese = Check::kNotApplicable;
  Check chordal_bound = Check::kNotApplicable;
  Check lemma3 = Check::kNotApplicable;
  Check theorem1 = Check::kNotApplicable;  // report only, never asserted

  /// One line per violated asserted inequality.
  std::vector<std::string> violations;

  bool asserted_ok() const { return violations.empty(); }
};

/// Tree-width (exact when possible), construction, budgeted exact search and
/// every applicable inequality.
BoundReport audit(const Graph& g, const InstanceMeta& meta, const AuditOptions& opts = {});

std::string csv_header();
std::string csv_row(const BoundReport& r);

/// One generator call in an experiment.
struct PlanEntry {
  std::string family;
  FamilyParams params;
  std::uint64_t seed = 0;
  int line = 0;  // source line, 0 for built-in suites
};

struct ExperimentPlan {
  std::vector<PlanEntry> entries;
  AuditOptions options;
};

/// Plan text: one instance per line, `<family> key=value ... [seed=N]`, with
/// `#` comments. A line `budget nodes=N [ms=M] [max_n=K]` sets the options.
ExperimentPlan parse_plan(std::istream& in);

/// Named built-in plans; "lemma3" is the construction suite. Unknown names
/// raise InputError.
ExperimentPlan builtin_plan(const std::string& name);
std::vector<std::string> builtin_plan_names();

/// Validates every entry against its generator before anything runs. Throws
/// InputError listing all bad entries.
void preflight(const ExperimentPlan& plan);

struct ExperimentResult {
  std::string csv;  // header plus one row per entry, in plan order
  std::vector<BoundReport> reports;
  int violated_instances = 0;
  std::vector<std::string> messages;  // violations, prefixed by entry
};

/// Runs the plan on up to `jobs` threads. Rows always come out in plan order.
ExperimentResult run_experiment(const ExperimentPlan& plan, int jobs = 1);

}  // namespace tpw

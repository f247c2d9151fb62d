#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "tpw/bounds.hpp"
#include "tpw/construct.hpp"
#include "tpw/errors.hpp"

using namespace tpw;

TEST_SUITE("bounds") {
  TEST_CASE("bound_formulas") {
    BoundFormulas f = bound_formulas(3, 10, true);
    CHECK(*f.referee == Rational(720));
    CHECK(f.theorem1 == Rational(340));
    CHECK(*f.chordal == Rational(27));
    CHECK(bound_formulas(5, 4, false).seese_lower == Rational(3));
    CHECK_FALSE(bound_formulas(5, 4, false).chordal.has_value());
    CHECK(bound_formulas(1, 1, true).theorem1 == Rational(25, 2));
    CHECK_FALSE(bound_formulas(1, 1, true).chordal.has_value());
    CHECK_FALSE(bound_formulas(2, 5, true).referee.has_value());
    CHECK(bound_formulas(1, 2, true).lemma3.ceil() == 66);
    CHECK_THROWS_AS(bound_formulas(0, 3, false), InputError);
  }

  TEST_CASE("theorem2_params") {
    Theorem2Params a = theorem2_params(3, Rational(1, 16));
    CHECK(a.ell == 2);
    CHECK(a.delta_threshold == Rational(12));
    CHECK(a.lower_coefficient == Rational(1, 16));
    Theorem2Params b = theorem2_params(4, Rational(1, 16));
    CHECK(b.ell == 2);
    CHECK(b.delta_threshold == Rational(12));
    CHECK(theorem2_params(5, Rational(1, 9)).delta_threshold == Rational(81, 8));
    CHECK_THROWS_AS(theorem2_params(3, Rational(1, 8)), InputError);
    CHECK_THROWS_AS(theorem2_params(3, Rational(0)), InputError);
    CHECK_THROWS_AS(theorem2_params(2, Rational(1, 16)), InputError);
  }

  TEST_CASE("audit examples") {
    Instance k6 = gen_family("clique", {{"n", 6}}, 0);
    BoundReport r = audit(k6.graph, k6.meta);
    CHECK(r.formulas.seese_lower == Rational(3));
    CHECK(r.exact_status == ExactStatus::kExact);
    CHECK(r.exact_lower == 3);
    CHECK(r.sandwich == Check::kHolds);
    CHECK(r.asserted_ok());

    Instance p7 = gen_family("path", {{"n", 7}}, 0);
    BoundReport rp = audit(p7.graph, p7.meta);
    CHECK(rp.exact_lower == 1);
    CHECK(rp.formulas.lemma3.ceil() == 66);
    CHECK(rp.sandwich == Check::kHolds);

    Instance tw2 = gen_lower_tw2(11);
    AuditOptions budget;
    budget.node_limit = 20000;
    BoundReport rt = audit(tw2.graph, tw2.meta, budget);
    CHECK(*rt.family_lower == Rational(20, 3));
    CHECK(rt.exact_status == ExactStatus::kLowerBound);
    CHECK(*rt.constructed_width <= lemma3_width_bound(2, 11).ceil());
    CHECK(rt.asserted_ok());
    std::string row = csv_row(rt);
    CHECK(row.find("20/3") != std::string::npos);
    CHECK(row.find("lower_bound") != std::string::npos);
  }

  TEST_CASE("capacity without a budget leaves exact fields empty") {
    Instance c = gen_family("cycle", {{"n", 30}}, 0);
    BoundReport r = audit(c.graph, c.meta);
    CHECK(r.exact_status == ExactStatus::kNotComputed);
    CHECK_FALSE(r.tw_exact);
    CHECK(csv_row(r).find(",,not_computed,") != std::string::npos);
    CHECK(r.asserted_ok());
  }

  TEST_CASE("a false family claim is caught") {
    Instance k6 = gen_family("clique", {{"n", 6}}, 0);
    k6.meta.claimed_tpw_lower = Rational(4);
    BoundReport r = audit(k6.graph, k6.meta);
    CHECK(r.sandwich == Check::kViolated);
    CHECK_FALSE(r.asserted_ok());
  }

  TEST_CASE("csv header is fixed") {
    CHECK(csv_header() ==
          "family,k,delta,n,vertices,tw,exact_tpw,exact_status,constructed_width,seese_lower,family_lower,"
          "chordal_upper,referee_upper,theorem1_upper,lemma3_upper_ceiling,sandwich_ok,theorem1_ok");
  }

  TEST_CASE("plans") {
    std::istringstream empty("# nothing\n\n");
    ExperimentResult e = run_experiment(parse_plan(empty));
    CHECK(e.csv == csv_header() + "\n");
    CHECK(e.violated_instances == 0);

    std::istringstream five(
        "budget nodes=50000\n"
        "clique n=6\n"
        "path n=7  # comment\n"
        "cycle n=5\n"
        "random_ktree n=9 k=2 seed=3\n"
        "lower_general k=2 delta=7 n=3\n");
    ExperimentPlan plan = parse_plan(five);
    CHECK(plan.options.node_limit == 50000);
    CHECK(plan.entries[3].seed == 3);
    ExperimentResult r = run_experiment(plan, 3);
    CHECK(r.reports.size() == 5);
    std::istringstream lines(r.csv);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 6);
    CHECK(r.reports[0].exact_lower == 3);
    CHECK(r.csv == run_experiment(plan, 1).csv);
  }

  TEST_CASE("preflight reports every bad entry before running") {
    std::istringstream text("path n=4\nlower_tw2 delta=12\nclique\nbogus n=3\n");
    ExperimentPlan plan = parse_plan(text);
    try {
      preflight(plan);
      FAIL("preflight accepted a bad plan");
    } catch (const InputError& e) {
      std::string msg = e.what();
      CHECK(msg.find("line 2") != std::string::npos);
      CHECK(msg.find("line 3") != std::string::npos);
      CHECK(msg.find("line 4") != std::string::npos);
      CHECK(msg.find("line 1") == std::string::npos);
    }
    std::istringstream bad_syntax("path n=x\n");
    CHECK_THROWS_AS(parse_plan(bad_syntax), InputError);
    CHECK_THROWS_AS(builtin_plan("nope"), InputError);
  }
}

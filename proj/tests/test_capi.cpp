#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "tpw/tpw.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tpw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  const int edges[] = {0, 1, 1, 2, 2, 0};
  tpw_graph* g = nullptr;
  REQUIRE(tpw_graph_create(3, edges, 3, &g) == TPW_OK);
  CHECK(tpw_graph_vertex_count(g) == 3);
  CHECK(tpw_graph_edge_count(g) == 3);
  CHECK(tpw_graph_max_degree(g) == 2);
  int chordal = 0;
  CHECK(tpw_graph_is_chordal(g, &chordal) == TPW_OK);
  CHECK(chordal == 1);
  char* text = nullptr;
  REQUIRE(tpw_graph_write(g, TPW_FORMAT_TEXT, &text) == TPW_OK);
  CHECK(take(text) == "p tpw 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  tpw_graph_free(g);

  const int loop[] = {1, 1};
  CHECK(tpw_graph_create(2, loop, 1, &g) == TPW_ERR_INPUT);
  CHECK(std::string(tpw_last_error()).find("self-loop") != std::string::npos);
  CHECK(tpw_graph_read("p tpw 2 1\ne 1 5\n", &g) == TPW_ERR_INPUT);
  CHECK(tpw_graph_generate("nope", "", 0, &g) == TPW_ERR_INPUT);
  CHECK(tpw_graph_create(2, nullptr, 0, nullptr) == TPW_ERR_INPUT);
}

TEST_CASE("decompose, construct, verify") {
  tpw_graph* g = nullptr;
  REQUIRE(tpw_graph_generate("lower_general", "k=2 delta=7 n=3", 0, &g) == TPW_OK);
  tpw_td* td = nullptr;
  REQUIRE(tpw_td_exact(g, &td) == TPW_OK);
  CHECK(tpw_td_width(td) == 3);
  CHECK(tpw_td_verify(g, td) == TPW_OK);

  tpw_tp* tp = nullptr;
  char* trace = nullptr;
  REQUIRE(tpw_construct(g, td, 7, &tp, &trace) == TPW_OK);
  CHECK(take(trace).find("\"case\"") != std::string::npos);
  CHECK(tpw_tp_verify(g, tp) == TPW_OK);
  CHECK(tpw_tp_width(tp) <= 480);

  tpw_tp* bad = nullptr;
  REQUIRE(tpw_tp_read("s tp 10 1 10\nb 1 1\nb 2 2\nb 3 3\nb 4 4\nb 5 5\nb 6 6\nb 7 7\nb 8 8\nb 9 9\nb 10 10\n", &bad) ==
          TPW_OK);
  CHECK(tpw_tp_verify(g, bad) == TPW_VIOLATION);
  tpw_tp_free(bad);

  tpw_td* wrong = nullptr;
  REQUIRE(tpw_td_read("s td 1 2 10\nb 1 1 2\n", &wrong) == TPW_OK);
  CHECK(tpw_td_verify(g, wrong) == TPW_VIOLATION);
  CHECK(std::string(tpw_last_error()).find("vertex coverage") != std::string::npos);
  tpw_td_free(wrong);

  tpw_tp_free(tp);
  tpw_td_free(td);
  tpw_graph_free(g);
}

TEST_CASE("exact search and refinement") {
  tpw_graph* g = nullptr;
  REQUIRE(tpw_graph_generate("clique", "n=7", 0, &g) == TPW_OK);
  tpw_exact_options opts;
  tpw_exact_options_init(&opts);
  CHECK(opts.max_n == 12);
  tpw_exact_result r;
  tpw_tp* w = nullptr;
  REQUIRE(tpw_exact(g, &opts, &r, &w) == TPW_OK);
  CHECK(r.complete == 1);
  CHECK(r.lower_bound == 4);
  CHECK(tpw_tp_width(w) == 4);
  tpw_tp* refined = nullptr;
  REQUIRE(tpw_refine(g, w, &refined) == TPW_OK);
  CHECK(tpw_tp_width(refined) <= 4);
  tpw_tp_free(refined);
  tpw_tp_free(w);
  tpw_graph_free(g);

  REQUIRE(tpw_graph_generate("cycle", "n=30", 0, &g) == TPW_OK);
  CHECK(tpw_exact(g, &opts, &r, nullptr) == TPW_ERR_CAPACITY);
  opts.node_limit = 500;
  CHECK(tpw_exact(g, &opts, &r, nullptr) == TPW_OK);
  CHECK(r.upper_bound == 2);
  tpw_graph_free(g);

  const int two_edges[] = {0, 1, 2, 3};
  REQUIRE(tpw_graph_create(5, two_edges, 2, &g) == TPW_OK);
  tpw_exact_options_init(&opts);
  REQUIRE(tpw_exact(g, &opts, &r, &w) == TPW_OK);
  CHECK(r.lower_bound == 1);
  CHECK(tpw_tp_bag_count(w) == 5);
  tpw_tp_free(w);
  tpw_graph_free(g);
}

TEST_CASE("audit and experiment") {
  tpw_graph* g = nullptr;
  REQUIRE(tpw_graph_generate("clique", "n=6", 0, &g) == TPW_OK);
  char* row = nullptr;
  char* messages = nullptr;
  REQUIRE(tpw_audit(g, nullptr, &row, &messages) == TPW_OK);
  CHECK(take(row).rfind("clique,,5,6,6,5,3,exact,", 0) == 0);
  CHECK(take(messages).empty());
  tpw_graph_free(g);

  char* csv = nullptr;
  REQUIRE(tpw_experiment("", nullptr, nullptr, 1, &csv, nullptr) == TPW_OK);
  CHECK(take(csv) == std::string(tpw_csv_header()) + "\n");
  CHECK(tpw_experiment("lower_tw2 delta=4\n", nullptr, nullptr, 1, &csv, nullptr) == TPW_ERR_INPUT);
  CHECK(tpw_experiment(nullptr, "unknown", nullptr, 1, &csv, nullptr) == TPW_ERR_INPUT);
}

TEST_CASE("lemma3 bound") {
  char* text = nullptr;
  int64_t ceiling = 0;
  REQUIRE(tpw_lemma3_bound(1, 2, &text, &ceiling) == TPW_OK);
  CHECK(take(text) == "34+22*sqrt2");
  CHECK(ceiling == 66);
  CHECK(tpw_lemma3_bound(0, 2, nullptr, nullptr) == TPW_ERR_INPUT);
}

#include <doctest.h>

#include <string>

#include "llt/llt_c.h"

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { llt_free_string(s); }
  std::string view() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("tuple round trip and compute") {
  llt_tuple* t = nullptr;
  REQUIRE(llt_tuple_parse("[{\"outer\":[1]},{\"outer\":[1]}]", &t) == LLT_OK);
  Str js;
  CHECK(llt_tuple_to_json(t, &js.s) == LLT_OK);
  CHECK(js.view().find("\"outer\":[1]") != std::string::npos);

  llt_poly *a = nullptr, *b = nullptr;
  REQUIRE(llt_compute(t, 2, 1, &a) == LLT_OK);
  REQUIRE(llt_partition_function(t, 2, 1, &b) == LLT_OK);
  CHECK(llt_poly_equal(a, b) == 1);

  Str text;
  CHECK(llt_poly_to_text(a, 1, &text.s) == LLT_OK);
  CHECK(text.view() == "t*x1^2 + (1 + t)*x1*x2 + t*x2^2");

  Str pj;
  CHECK(llt_poly_to_json(a, &pj.s) == LLT_OK);
  llt_poly* c = nullptr;
  REQUIRE(llt_poly_parse(pj.view().c_str(), &c) == LLT_OK);
  CHECK(llt_poly_equal(a, c) == 1);

  llt_poly_free(a);
  llt_poly_free(b);
  llt_poly_free(c);
  llt_tuple_free(t);
}

TEST_CASE("job envelope") {
  llt_tuple* t = nullptr;
  int n = 0;
  REQUIRE(llt_job_parse("{\"tuple\":[{\"outer\":[2,1]}],\"n\":3}", &t, &n) == LLT_OK);
  CHECK(n == 3);
  llt_tuple_free(t);
  t = nullptr;
  REQUIRE(llt_job_parse("[{\"outer\":[2,1]}]", &t, &n) == LLT_OK);
  CHECK(n == -1);
  llt_tuple_free(t);
}

TEST_CASE("error codes") {
  llt_tuple* t = nullptr;
  CHECK(llt_tuple_parse("not json", &t) == LLT_E_SCHEMA);
  CHECK(llt_tuple_parse("[{\"outer\":[1,3]}]", &t) == LLT_E_SCHEMA);
  CHECK(std::string(llt_last_error()).size() > 0);
  CHECK(llt_tuple_parse(nullptr, &t) == LLT_E_NULLARG);

  REQUIRE(llt_tuple_parse("[{\"outer\":[1]}]", &t) == LLT_OK);
  llt_poly* p = nullptr;
  CHECK(llt_compute(t, 0, 1, &p) == LLT_E_PRECONDITION);
  llt_tuple_free(t);
}

TEST_CASE("swap and matchings reports") {
  llt_tuple* t = nullptr;
  REQUIRE(llt_tuple_parse(
              "[{\"outer\":[8,7,6]},{\"outer\":[4,3,2],\"inner\":[2,0,0]}]", &t) == LLT_OK);
  Str swap;
  REQUIRE(llt_swap_report(t, 2, 1, 0, &swap.s) == LLT_OK);
  CHECK(swap.view().find("\"exponent\":5") != std::string::npos);
  CHECK(swap.view().find("\"unique\":true") != std::string::npos);
  Str beads;
  REQUIRE(llt_beads_report(t, &beads.s) == LLT_OK);
  CHECK(beads.view().find("\"label\":5") != std::string::npos);
  Str match;
  REQUIRE(llt_matchings_report(t, &match.s) == LLT_OK);
  CHECK(match.view().find("\"classified_unique\":true") != std::string::npos);
  llt_tuple_free(t);
}

TEST_CASE("relations report") {
  Str out;
  REQUIRE(llt_relations_report("{\"family\":{\"values\":[1,0]}}", 1, 1, &out.s) == LLT_OK);
  CHECK(out.view().find("\"order\"") != std::string::npos);
  CHECK(out.view().find("\"g\"") != std::string::npos);
  CHECK(llt_relations_report("{\"nofamily\":1}", 1, 1, &out.s) == LLT_E_SCHEMA);
}

TEST_CASE("render") {
  llt_tuple* t = nullptr;
  REQUIRE(llt_tuple_parse("[{\"outer\":[1]},{\"outer\":[1]}]", &t) == LLT_OK);
  Str svg;
  REQUIRE(llt_render(t, 2, "lattice", "svg", &svg.s) == LLT_OK);
  CHECK(svg.view().rfind("<svg", 0) == 0);
  Str tikz;
  REQUIRE(llt_render(t, 2, "beads", "tikz", &tikz.s) == LLT_OK);
  CHECK(tikz.view().find("tikzpicture") != std::string::npos);
  CHECK(llt_render(t, 2, "nonsense", "svg", &svg.s) == LLT_E_SCHEMA);
  llt_tuple_free(t);
}

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "opwlab/opwlab.h"

using nlohmann::json;

namespace {

opw_graph* parse(const std::string& text, opw_format f = OPW_FORMAT_AUTO) {
  opw_graph* g = nullptr;
  REQUIRE(opw_graph_parse(text.data(), text.size(), f, &g) == OPW_OK);
  return g;
}

json report_json(opw_report* r) { return json::parse(opw_report_json(r, 0)); }

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(opw_version()) == "0.1.0");
  CHECK(std::string(opw_status_name(OPW_OK)) == "ok");
  CHECK(std::string(opw_status_name(OPW_ERR_NOT_OUTERPLANAR)) == "not outerplanar");
}

TEST_CASE("graph parsing and format detection") {
  opw_graph* k3 = parse("3 3\n0 1\n1 2\n0 2\n");
  CHECK(opw_graph_order(k3) == 3);
  CHECK(opw_graph_size(k3) == 3);
  opw_graph_free(k3);

  opw_graph* g6 = parse("Bw\n");
  CHECK(opw_graph_order(g6) == 3);
  CHECK(opw_graph_size(g6) == 3);
  opw_graph_free(g6);

  opw_graph* m = parse("mop 5\n0 2\n0 3\n");
  CHECK(opw_graph_order(m) == 5);
  CHECK(opw_graph_size(m) == 7);
  opw_graph_free(m);

  opw_graph* dup = parse("3 2\n0 1\n0 1\n");
  CHECK(opw_graph_warning_count(dup) == 1);
  CHECK(opw_graph_warning(dup, 0) != nullptr);
  CHECK(opw_graph_warning(dup, 1) == nullptr);
  opw_graph_free(dup);

  opw_graph* bad = nullptr;
  const std::string crossing = "mop 4\n0 2\n1 3\n";
  CHECK(opw_graph_parse(crossing.data(), crossing.size(), OPW_FORMAT_AUTO, &bad) == OPW_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(opw_last_error()) > 0);
  const std::string junk = "3\n0 x\n";
  CHECK(opw_graph_parse(junk.data(), junk.size(), OPW_FORMAT_EDGES, &bad) == OPW_ERR_PARSE);
  CHECK(opw_graph_parse(junk.data(), junk.size(), OPW_FORMAT_EDGES, nullptr) == OPW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("edges and serialization") {
  const int edges[] = {0, 1, 1, 2, 2, 3};
  opw_graph* p = nullptr;
  REQUIRE(opw_graph_from_edges(4, edges, 3, &p) == OPW_OK);
  char* text = nullptr;
  REQUIRE(opw_graph_serialize(p, OPW_FORMAT_GRAPH6, &text) == OPW_OK);
  CHECK(std::string(text) == std::string("C") + static_cast<char>(41 + 63) + "\n");
  opw_string_free(text);
  CHECK(opw_graph_serialize(p, OPW_FORMAT_AUTO, &text) == OPW_ERR_INVALID_ARGUMENT);
  CHECK(opw_graph_serialize(p, OPW_FORMAT_MOP, &text) == OPW_ERR_NOT_OUTERPLANAR);

  const int loop[] = {0, 0};
  opw_graph* q = nullptr;
  CHECK(opw_graph_from_edges(2, loop, 1, &q) != OPW_OK);
  const int far[] = {0, 5};
  CHECK(opw_graph_from_edges(2, far, 1, &q) != OPW_OK);
  CHECK(q == nullptr);
  opw_graph_free(p);
}

TEST_CASE("width queries") {
  opw_graph* star = parse("4 3\n0 1\n0 2\n0 3\n");
  int w = -1;
  REQUIRE(opw_pathwidth(star, 1, &w) == OPW_OK);
  CHECK(w == 1);
  REQUIRE(opw_anchored_pathwidth(star, 1, &w) == OPW_OK);
  CHECK(w == 1);
  int op = -1;
  REQUIRE(opw_is_outerplanar(star, &op) == OPW_OK);
  CHECK(op == 1);
  opw_graph_free(star);

  opw_graph* k4 = parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  REQUIRE(opw_is_outerplanar(k4, &op) == OPW_OK);
  CHECK(op == 0);
  opw_graph_free(k4);

  opw_graph* big = nullptr;
  REQUIRE(opw_graph_random_mop(30, 1, &big) == OPW_OK);
  CHECK(opw_pathwidth(big, 1, &w) == OPW_ERR_SCOPE);
  CHECK(std::string(opw_last_error()).find("26") != std::string::npos);
  opw_graph_free(big);
  CHECK(opw_pathwidth(nullptr, 1, &w) == OPW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("commands through the C boundary") {
  opw_graph* tri = parse("mop 6\n0 2\n2 4\n0 4\n");
  opw_report* r = nullptr;

  REQUIRE(opw_cmd_pw(tri, OPW_ENGINE_BOTH, -1, 2, &r) == OPW_OK);
  CHECK(opw_report_passed(r) == 1);
  json j = report_json(r);
  CHECK(j["results"]["width"] == 3);
  CHECK(j["passed"] == true);
  CHECK_FALSE(j.contains("wall_time"));
  CHECK(json::parse(opw_report_json(r, 1)).contains("wall_time"));
  CHECK(opw_report_artifact(r, "dot") != nullptr);
  CHECK(opw_report_artifact(r, "nope") == nullptr);
  opw_report_free(r);

  REQUIRE(opw_cmd_extract(tri, 2, 0, &r) == OPW_OK);
  j = report_json(r);
  CHECK(j["results"]["selected_count"].get<int>() >= 5);
  CHECK(opw_report_artifact(r, "certificate") != nullptr);
  opw_report_free(r);

  REQUIRE(opw_cmd_ik(tri, 2, &r) == OPW_OK);
  CHECK(report_json(r)["results"]["size"] == 5);
  opw_report_free(r);

  REQUIRE(opw_cmd_convert(tri, OPW_FORMAT_MOP, &r) == OPW_OK);
  opw_report_free(r);
  opw_graph_free(tri);

  REQUIRE(opw_cmd_mk(2, 8, 2, &r) == OPW_OK);
  j = report_json(r);
  CHECK(j["results"]["status"] == "exact");
  CHECK(j["results"]["value"] == 5);
  opw_report_free(r);

  REQUIRE(opw_cmd_enum(6, 1, OPW_FORMAT_AUTO, &r) == OPW_OK);
  CHECK(report_json(r)["results"]["count"] == 3);
  opw_report_free(r);

  REQUIRE(opw_cmd_witness(2, nullptr, 0, &r) == OPW_OK);
  CHECK(report_json(r)["results"]["order"] == 19);
  opw_report_free(r);

  REQUIRE(opw_cmd_witness(3, nullptr, 0, &r) == OPW_OK);
  CHECK(report_json(r)["results"]["status"] == "skipped");
  opw_report_free(r);

  r = nullptr;
  CHECK(opw_cmd_search_remark(13, 1, &r) == OPW_ERR_SCOPE);
  CHECK(r == nullptr);
  CHECK(opw_cmd_mk(2, 40, 1, &r) == OPW_ERR_SCOPE);
  CHECK(opw_cmd_enum(6, 0, OPW_FORMAT_AUTO, nullptr) == OPW_ERR_INVALID_ARGUMENT);

  opw_graph* k4 = parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(opw_cmd_extract(k4, 2, 0, &r) == OPW_ERR_NOT_OUTERPLANAR);
  opw_graph_free(k4);
}

TEST_CASE("last error is per thread") {
  opw_graph* g = nullptr;
  const std::string junk = "x y z\n";
  REQUIRE(opw_graph_parse(junk.data(), junk.size(), OPW_FORMAT_EDGES, &g) != OPW_OK);
  std::string other = "unset";
  std::thread t([&] { other = opw_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(opw_last_error()) > 0);
}

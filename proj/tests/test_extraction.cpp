#include <algorithm>

#include "doctest.h"
#include "opwlab/error.hpp"
#include "opwlab/extraction.hpp"
#include "opwlab/extremal.hpp"
#include "opwlab/serialize.hpp"
#include "oracles.hpp"

using namespace opw;

namespace {

std::int64_t need(const ExtractionCertificate& c) { return c.claimed_bound.ceil(); }

void check_certificate(const Graph& g, const ExtractionCertificate& c) {
  CertificateCheck v = verify_certificate(g, c);
  for (const auto& p : v.problems) INFO(p);
  CHECK(v.ok);
  CHECK(static_cast<std::int64_t>(c.selected.size()) >= need(c));
}

// Independent view of find_split_edge: components of G - {u, v} by search.
int smallest_qualifying(const Mop& m, int threshold, bool strict) {
  Graph g = m.graph();
  int best = -1;
  for (const auto& e : g.edges())
    for (const auto& comp : connected_components(g, VertexSet(m.order(), {e.u, e.v}))) {
      const int s = comp.size();
      if ((strict ? s > threshold : s >= threshold) && (best < 0 || s < best)) best = s;
    }
  return best;
}

}  // namespace

TEST_CASE("find_split_edge") {
  CHECK_FALSE(find_split_edge(Mop::triangle(), 5, true).has_value());
  for (int n = 4; n <= 10; ++n)
    for (const Mop& m : enumerate_mops(n, true))
      for (int threshold : {1, 2, 3, 5}) {
        for (bool strict : {true, false}) {
          auto s = find_split_edge(m, threshold, strict);
          const int expected = smallest_qualifying(m, threshold, strict);
          if (expected < 0) {
            CHECK_FALSE(s.has_value());
            continue;
          }
          REQUIRE(s.has_value());
          CHECK(s->component.size() == expected);
          auto comps = connected_components(m.graph(), VertexSet(n, {s->edge.u, s->edge.v}));
          CHECK(std::find(comps.begin(), comps.end(), s->component) != comps.end());
        }
        if (n >= threshold + 3) CHECK(find_split_edge(m, threshold, true).has_value());
      }

  auto f7 = find_split_edge(fan(7), 5, false);
  REQUIRE(f7.has_value());
  CHECK(f7->component.size() == 5);
  CHECK(f7->edge == Edge(0, 1));
  CHECK(f7->component == VertexSet(7, {2, 3, 4, 5, 6}));
}

TEST_CASE("split_face") {
  Mop sq(4, {{0, 2}});
  FaceSplit f = split_face(sq, Edge(0, 2), VertexSet(4, {1}));
  CHECK(f.c == 1);
  CHECK(f.h1.size() + f.h2.size() == 0);

  FaceSplit outer = split_face(sq, Edge(0, 1), VertexSet(4, {2, 3}));
  CHECK(outer.c == 2);
  CHECK(outer.h1 == VertexSet(4, {3}));
  CHECK(outer.h2.empty());

  CHECK_THROWS_AS(split_face(sq, Edge(1, 3), VertexSet(4, {0})), Error);
  CHECK_THROWS_AS(split_face(sq, Edge(0, 2), VertexSet(4, {1, 3})), Error);

  SUBCASE("partition and separation on every chord side") {
    for (int n = 5; n <= 9; ++n)
      for (const Mop& m : enumerate_mops(n, true)) {
        Graph g = m.graph();
        for (const auto& e : g.edges())
          for (const auto& h : connected_components(g, VertexSet(n, {e.u, e.v}))) {
            FaceSplit s = split_face(m, e, h);
            CHECK(h.contains(s.c));
            CHECK(s.h1.size() + s.h2.size() == h.size() - 1);
            CHECK((s.h1 | s.h2 | VertexSet(n, {s.c})) == h);
            CHECK(g.has_edge(s.c, e.u));
            CHECK(g.has_edge(s.c, e.v));
            // H1 hangs off a and c only.
            for (int x : s.h1.members())
              for (int y : g.neighbors(x)) CHECK((s.h1.contains(y) || y == e.u || y == s.c));
          }
      }
  }
}

TEST_CASE("glue_anchored") {
  PathDecomposition glued = glue_anchored(PathDecomposition{{{0, 1}}}, PathDecomposition{{{0, 2}}}, 0);
  CHECK(glued.bags == std::vector<std::vector<int>>{{0, 1}, {0, 2}});
  CHECK(glued.width() == 1);

  CHECK_THROWS_AS(glue_anchored(PathDecomposition{{{0, 1}}}, PathDecomposition{{{0, 1, 2}}}, 0), Error);
  CHECK_THROWS_AS(glue_anchored(PathDecomposition{{{0, 1}, {1}}}, PathDecomposition{{{0, 2}}}, 0), Error);

  SUBCASE("two anchored 5-vertex pieces make a width-2 decomposition of 9 vertices") {
    // Two fans on 5 vertices sharing vertex 0 only.
    Graph g(9);
    for (const auto& e : fan(5).graph().edges()) g.add_edge(e.u, e.v);
    auto shift = [](int v) { return v == 0 ? 0 : v + 4; };
    for (const auto& e : fan(5).graph().edges()) g.add_edge(shift(e.u), shift(e.v));
    auto left = bag_search_pathwidth(induced_subgraph(g, std::vector<int>{0, 1, 2, 3, 4}).graph, 2, 0);
    auto right_sub = induced_subgraph(g, std::vector<int>{0, 5, 6, 7, 8});
    auto right = bag_search_pathwidth(right_sub.graph, 2, 0);
    REQUIRE(left.has_value());
    REQUIRE(right.has_value());
    for (auto& bag : right->bags)
      for (int& v : bag) v = right_sub.to_original[static_cast<std::size_t>(v)];
    PathDecomposition pd = glue_anchored(*left, *right, 0);
    Validation v = validate_path_decomposition(g, pd);
    CHECK(v.ok());
    CHECK(v.width == 2);
  }
}

TEST_CASE("general extraction") {
  Graph five = fan(5).graph();
  ExtractionCertificate base = extract_general(five, 2, 5);
  CHECK(base.selected.size() == 5);
  check_certificate(five, base);

  Graph w1 = witness_graph(1, Mop::triangle());
  ExtractionCertificate c1 = extract_general(w1, 1, 2);
  CHECK(c1.selected.size() >= 4);
  check_certificate(w1, c1);

  Graph big = random_mop(50, 3).graph();
  ExtractionCertificate c2 = extract_general(big, 2, 5);
  CHECK(c2.selected.size() >= 32);
  check_certificate(big, c2);

  CHECK_THROWS_AS(extract_general(complete_graph(4), 1, 2), Error);
  CHECK_THROWS_AS(extract_general(five, 1, 3), Error);  // triangle has pathwidth 2
  CHECK_THROWS_AS(extract_general(five, 2, 6), Error);  // triforce has pathwidth 3

  SUBCASE("non-maximal and disconnected inputs") {
    for (int seed = 0; seed < 60; ++seed) {
      Graph g = random_graph(8 + seed % 20, 0.12, static_cast<std::uint64_t>(seed));
      if (!is_outerplanar(g)) continue;
      check_certificate(g, extract_general(g, 1, 2));
      check_certificate(g, extract_general(g, 2, 5));
      if (g.order() >= 3) check_certificate(g, extract_pw2(g));
    }
  }
  SUBCASE("trusted M beyond the checked range is recorded") {
    Graph g = random_mop(20, 1).graph();
    ExtractionCertificate c = extract_general(g, 5, 17);
    CHECK(c.assumption.has_value());
    check_certificate(g, c);
  }
}

TEST_CASE("pathwidth-2 extraction") {
  Graph t = triforce().graph();
  ExtractionCertificate c = extract_pw2(t);
  CHECK(c.selected.size() >= 5);
  check_certificate(t, c);

  for (const Mop& m : enumerate_mops(7, true)) {
    ExtractionCertificate c7 = extract_pw2(m.graph());
    CHECK(c7.selected.size() == 5);
  }

  Graph big = random_mop(70, 11).graph();
  ExtractionCertificate c70 = extract_pw2(big);
  CHECK(c70.selected.size() >= 50);
  check_certificate(big, c70);

  CHECK_THROWS_AS(extract_pw2(path_graph(2)), Error);
  CHECK_THROWS_AS(extract_pw2(complete_bipartite(2, 3)), Error);
}

TEST_CASE("soundness over Mop classes and random Mops") {
  for (int n = 3; n <= 11; ++n)
    for (const Mop& m : enumerate_mops(n, true)) {
      Graph g = m.graph();
      ExtractionCertificate a = extract_general(g, 1, 2);
      ExtractionCertificate b = extract_general(g, 2, 5);
      ExtractionCertificate p = extract_pw2(g);
      check_certificate(g, a);
      check_certificate(g, b);
      check_certificate(g, p);
      CHECK(static_cast<int>(p.selected.size()) <= brute_force_Ik(g, 2).size);
      if (n <= 8) CHECK(static_cast<int>(a.selected.size()) <= oracle::max_induced(g, 1));
    }
  for (int n : {20, 35, 50, 80, 120})
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Graph g = random_mop(n, seed).graph();
      check_certificate(g, extract_general(g, 1, 2));
      check_certificate(g, extract_general(g, 2, 5));
      check_certificate(g, extract_pw2(g));
    }
}

TEST_CASE("trace accounting") {
  Graph g = random_mop(60, 5).graph();
  for (const ExtractionCertificate& c : {extract_pw2(g), extract_general(g, 1, 2)}) {
    int n = g.order();
    for (std::size_t i = 0; i < c.trace.size(); ++i) {
      const TraceStep& s = c.trace[i];
      CHECK(s.n == n);
      if (i + 1 < c.trace.size()) n = n - static_cast<int>(s.h.size()) - 2;
    }
    CHECK((c.trace.back().rule == TraceStep::Rule::Base || c.trace.back().rule == TraceStep::Rule::Fallback));
    CHECK(c.trace.size() <= static_cast<std::size_t>(g.order()));
  }
}

TEST_CASE("certificate verification rejects tampering") {
  Graph g = random_mop(30, 2).graph();
  ExtractionCertificate c = extract_pw2(g);
  REQUIRE(verify_certificate(g, c).ok);

  SUBCASE("dropped vertex") {
    ExtractionCertificate t = c;
    t.selected.pop_back();
    CHECK_FALSE(verify_certificate(g, t).ok);
  }
  SUBCASE("foreign bag vertex") {
    ExtractionCertificate t = c;
    int foreign = 0;
    while (std::binary_search(t.selected.begin(), t.selected.end(), foreign)) ++foreign;
    t.decomposition.bags.front().push_back(foreign);
    CertificateCheck r = verify_certificate(g, t);
    CHECK_FALSE(r.ok);
  }
  SUBCASE("inflated bound") {
    ExtractionCertificate t = c;
    t.claimed_bound = Rational(g.order());
    CHECK_FALSE(verify_certificate(g, t).ok);
  }
  SUBCASE("edited trace") {
    ExtractionCertificate t = c;
    REQUIRE(t.trace.size() >= 2);
    t.trace.front().n += 1;
    CHECK_FALSE(verify_certificate(g, t).ok);
  }
  SUBCASE("broken decomposition") {
    ExtractionCertificate t = c;
    t.decomposition.bags.erase(t.decomposition.bags.begin());
    CHECK_FALSE(verify_certificate(g, t).ok);
  }
  SUBCASE("wrong graph") {
    CHECK_FALSE(verify_certificate(random_mop(30, 3).graph(), c).ok);
  }
}

TEST_CASE("certificate JSON round trip") {
  Graph g = random_mop(40, 4).graph();
  ExtractionCertificate c = extract_pw2(g);
  Json j = to_json(c);
  CHECK(j["bound"]["num"] == 200);
  CHECK(j["bound"]["den"] == 7);
  ExtractionCertificate back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back.selected == c.selected);
  CHECK(back.decomposition == c.decomposition);
  CHECK(back.trace.size() == c.trace.size());
  CHECK(verify_certificate(g, back).ok);
  CHECK_THROWS_AS(certificate_from_json(Json::parse("{\"method\": \"pw2\"}")), Error);
}

TEST_CASE("outerplanar graphs on at most 5 vertices anchor at width 2") {
  int pairs = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_all_graphs(n)) {
      if (!is_outerplanar(g)) continue;
      for (int v = 0; v < n; ++v) {
        CHECK(anchored_pathwidth(g, v) <= 2);
        ++pairs;
      }
    }
  CHECK(pairs > 0);
}

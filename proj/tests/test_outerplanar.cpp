#include <map>
#include <set>

#include "doctest.h"
#include "opwlab/error.hpp"
#include "opwlab/outerplanar.hpp"
#include "opwlab/width.hpp"
#include "oracles.hpp"

using namespace opw;

namespace {

// No two edges cross when the vertices are placed on a circle in `order`.
bool non_crossing(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  auto edges = g.edges();
  for (auto& e : edges) e = Edge(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (chords_cross(edges[i], edges[j])) return false;
  return true;
}

Graph square_with_chord() { return Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}); }

}  // namespace

TEST_CASE("Mop invariants") {
  CHECK(Mop::triangle().order() == 3);
  CHECK(Mop(5, {{0, 2}, {0, 3}}).graph().size() == 7);
  CHECK_THROWS_AS(Mop(5, {{0, 2}}), Error);                  // too few chords
  CHECK_THROWS_AS(Mop(5, {{0, 2}, {1, 3}}), Error);          // crossing
  CHECK_THROWS_AS(Mop(5, {{0, 1}, {0, 2}}), Error);          // outer edge
  CHECK_THROWS_AS(Mop(5, {{0, 2}, {0, 2}}), Error);          // duplicate
  CHECK_THROWS_AS(Mop(5, {{0, 2}, {0, 4}}), Error);          // {0,4} is outer
  CHECK_THROWS_AS(Mop(2, {}), Error);
  CHECK(triforce().internal_faces() == std::vector<Triangle>{{0, 2, 4}});
  CHECK(fan(6).internal_faces().empty());
  CHECK(fan(7).triangles().size() == 5);
}

TEST_CASE("outerplanarity recognition") {
  CHECK_FALSE(is_outerplanar(complete_graph(4)));
  CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
  CHECK(is_outerplanar(cycle_graph(8)));
  CHECK(is_outerplanar(triforce().graph()));
  CHECK(is_outerplanar(Graph(0)));
  CHECK(is_outerplanar(random_tree(40, 2)));
  CHECK_FALSE(is_outerplanar(complete_graph(5)));

  SUBCASE("matches the minor oracle on every graph with at most 6 vertices") {
    for (int n = 0; n <= 6; ++n)
      for (const Graph& g : enumerate_all_graphs(n)) {
        const bool fast = is_outerplanar(g);
        CHECK(fast == oracle::is_outerplanar(g));
        if (fast) CHECK(non_crossing(g, *outerplanar_order(g)));
      }
  }
  SUBCASE("matches the minor oracle on random 7-vertex graphs") {
    for (int seed = 0; seed < 150; ++seed) {
      Graph g = random_graph(7, 0.25 + 0.05 * (seed % 6), static_cast<std::uint64_t>(seed));
      CHECK(is_outerplanar(g) == oracle::is_outerplanar(g));
    }
  }
  SUBCASE("orders of larger outerplanar graphs are non-crossing") {
    for (int seed = 0; seed < 40; ++seed) {
      Graph g = random_mop(30 + seed, static_cast<std::uint64_t>(seed)).graph();
      std::vector<int> perm(static_cast<std::size_t>(g.order()));
      for (int i = 0; i < g.order(); ++i) perm[static_cast<std::size_t>(i)] = (i * 7 + seed) % g.order();
      if (std::set<int>(perm.begin(), perm.end()).size() != perm.size()) continue;
      Graph shuffled = relabel(g, perm);
      auto order = outerplanar_order(shuffled);
      REQUIRE(order.has_value());
      CHECK(non_crossing(shuffled, *order));
      // One more edge between far-apart vertices destroys outerplanarity.
      Graph plus = g;
      plus.add_edge(0, g.order() / 2 + 1);
      if (plus.size() > g.size()) CHECK_FALSE(is_outerplanar(plus));
    }
  }
}

TEST_CASE("completion to a Mop") {
  MopCompletion c = complete_to_mop(path_graph(4));
  CHECK(c.mop.order() == 4);
  Graph mg = c.mop.graph();
  for (const auto& e : path_graph(4).edges())
    CHECK(mg.has_edge(c.position[static_cast<std::size_t>(e.u)], c.position[static_cast<std::size_t>(e.v)]));

  CHECK(complete_to_mop(cycle_graph(6)).mop.chords().size() == 3);
  CHECK_THROWS_AS(complete_to_mop(complete_graph(4)), Error);
  CHECK_THROWS_AS(complete_to_mop(path_graph(2)), Error);

  SUBCASE("contains its input, on random outerplanar graphs") {
    int done = 0;
    for (int seed = 0; done < 200; ++seed) {
      Graph g = random_graph(5 + seed % 12, 0.2, static_cast<std::uint64_t>(seed));
      if (!is_outerplanar(g) || g.order() < 3) continue;
      MopCompletion m = complete_to_mop(g);
      Graph h = m.mop.graph();
      CHECK(h.size() == static_cast<std::size_t>(2 * g.order() - 3));
      for (const auto& e : g.edges())
        CHECK(h.has_edge(m.position[static_cast<std::size_t>(e.u)], m.position[static_cast<std::size_t>(e.v)]));
      ++done;
    }
  }
  SUBCASE("a Mop completes to itself") {
    Mop m = random_mop(25, 8);
    CHECK(complete_to_mop(m.graph()).mop.graph().size() == m.graph().size());
  }
}

TEST_CASE("outer cycle") {
  CHECK(outer_cycle(square_with_chord()) == std::vector<int>{0, 1, 2, 3});
  CHECK(outer_cycle(fan(5).graph()) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(outer_cycle(complete_graph(3)) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(outer_cycle(complete_graph(4)), Error);
  CHECK_THROWS_AS(outer_cycle(cycle_graph(5)), Error);

  MopCompletion back = mop_from_maximal(relabel(triforce().graph(), std::vector<int>{3, 5, 0, 1, 4, 2}));
  CHECK(canonical_code(back.mop.graph()) == canonical_code(triforce().graph()));
}

TEST_CASE("weak dual") {
  DualTree t = weak_dual(Mop::triangle());
  CHECK(t.tree.order() == 1);
  CHECK(canonical_code(weak_dual(fan(5)).tree) == canonical_code(path_graph(3)));
  CHECK(canonical_code(weak_dual(triforce()).tree) == canonical_code(star_graph(3)));

  CHECK(mop_from_dual_tree(Graph(1)) == Mop::triangle());
  CHECK(canonical_code(mop_from_dual_tree(path_graph(3)).graph()) == canonical_code(fan(5).graph()));
  CHECK(canonical_code(mop_from_dual_tree(star_graph(3)).graph()) == canonical_code(triforce().graph()));
  CHECK_THROWS_AS(mop_from_dual_tree(star_graph(4)), Error);
  CHECK_THROWS_AS(mop_from_dual_tree(cycle_graph(4)), Error);

  SUBCASE("dual of the rebuilt Mop is the tree again, n <= 10") {
    // The dual does not determine the Mop: a path is the dual of a fan and of a zigzag.
    for (int n = 3; n <= 10; ++n)
      for (const Mop& m : enumerate_mops(n, true)) {
        DualTree d = weak_dual(m);
        CHECK(d.tree.order() == n - 2);
        Mop back = mop_from_dual_tree(d.tree);
        CHECK(back.order() == n);
        CHECK(canonical_code(weak_dual(back).tree) == canonical_code(d.tree));
      }
    CHECK(canonical_code(weak_dual(Mop(6, {{0, 2}, {0, 3}, {3, 5}})).tree) == canonical_code(weak_dual(fan(6)).tree));
  }
  SUBCASE("dual lower bound for n <= 12") {
    for (int n = 3; n <= 12; ++n)
      for (const Mop& m : enumerate_mops(n, true))
        CHECK(tree_pathwidth(weak_dual(m).tree) + 1 <= vs_pathwidth(m.graph()).width);
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_mops(5, false).size() == 5);
  CHECK(enumerate_mops(5, true).size() == 1);
  CHECK(enumerate_mops(6, false).size() == 14);
  CHECK(enumerate_mops(6, true).size() == 3);
  CHECK_THROWS_AS(enumerate_mops(17, true), Error);
  CHECK_THROWS_AS(enumerate_mops(2, true), Error);

  SUBCASE("labelled counts are Catalan numbers") {
    for (int n = 3; n <= 12; ++n) {
      CHECK(enumerate_mops(n, false).size() == oracle::catalan(n - 2));
      CHECK(catalan(n - 2) == oracle::catalan(n - 2));
    }
  }
  SUBCASE("class counts match isomorphism dedup of the labelled lists") {
    for (int n = 3; n <= 10; ++n) {
      std::set<std::string> codes;
      for (const Mop& m : enumerate_mops(n, false)) codes.insert(canonical_code(m.graph()));
      CHECK(enumerate_mops(n, true).size() == codes.size());
    }
  }
  SUBCASE("labelled triangulations are distinct and valid") {
    auto all = enumerate_mops(8, false);
    std::set<std::vector<Edge>> seen;
    for (const Mop& m : all) seen.insert(m.chords());
    CHECK(seen.size() == all.size());
  }
  SUBCASE("the hexagon classes are fan, snake and triforce") {
    std::set<std::string> codes;
    for (const Mop& m : enumerate_mops(6, true)) codes.insert(canonical_code(m.graph()));
    CHECK(codes.contains(canonical_code(fan(6).graph())));
    CHECK(codes.contains(canonical_code(triforce().graph())));
    CHECK(codes.contains(canonical_code(Mop(6, {{0, 2}, {0, 3}, {3, 5}}).graph())));
  }
  CHECK(dihedral_canonical(Mop(5, {{1, 3}, {1, 4}})) == Mop(5, {{0, 2}, {0, 3}}));
}

TEST_CASE("random Mops") {
  CHECK(random_mop(3, 12345) == Mop::triangle());
  CHECK(random_mop(40, 7) == random_mop(40, 7));
  CHECK(random_mop(40, 7) != random_mop(40, 8));
  CHECK(random_mop(300, 1).order() == 300);

  SUBCASE("uniform over the five pentagon triangulations") {
    std::map<std::vector<Edge>, int> counts;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) ++counts[random_mop(5, seed).chords()];
    CHECK(counts.size() == 5);
    double chi2 = 0;
    for (const auto& [chords, c] : counts) {
      CHECK(c >= 1800);
      CHECK(c <= 2200);
      chi2 += (c - 2000.0) * (c - 2000.0) / 2000.0;
    }
    CHECK(chi2 < 18.47);  // 99.9% quantile, 4 degrees of freedom
  }
  SUBCASE("roughly uniform over the 42 heptagon triangulations") {
    std::map<std::vector<Edge>, int> counts;
    for (std::uint64_t seed = 0; seed < 42000; ++seed) ++counts[random_mop(7, seed).chords()];
    CHECK(counts.size() == 42);
    double chi2 = 0;
    for (const auto& [chords, c] : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
    CHECK(chi2 < 80.0);  // 99.9% quantile at 41 degrees of freedom is about 74.7
  }
}

TEST_CASE("minimal pathwidth trees") {
  CHECK(minimal_pw_tree(1, false) == path_graph(2));
  Graph t2 = minimal_pw_tree(2, false);
  CHECK(t2.order() == 7);
  CHECK(vs_pathwidth(t2).width == 2);
  Graph t3 = minimal_pw_tree(3, true);
  CHECK(t3.order() == 22);
  CHECK(t3.max_degree() == 3);
  CHECK(tree_pathwidth(t3) == 3);
  CHECK(vs_pathwidth(t3).width == 3);
  CHECK(minimal_pw_tree(3, false).order() == 22);
  CHECK(minimal_pw_tree(4, true).order() == 67);
  CHECK(minimal_pw_tree(4, true).max_degree() == 3);
  CHECK_THROWS_AS(minimal_pw_tree(0, true), Error);
  CHECK_THROWS_AS(minimal_pw_tree(5, true), Error);
}

TEST_CASE("mop text format") {
  Mop m = triforce();
  CHECK(to_mop_text(m) == "mop 6\n0 2\n0 4\n2 4\n");
  CHECK(parse_mop_text(to_mop_text(m)) == m);
  CHECK(parse_mop_text("# comment\nmop 3\n") == Mop::triangle());
  CHECK_THROWS_AS(parse_mop_text("mop 5\n0 2\n1 3\n"), Error);
  CHECK_THROWS_AS(parse_mop_text("mop 5\n0 9\n0 2\n"), Error);
  CHECK_THROWS_AS(parse_mop_text("5\n"), Error);
  CHECK_THROWS_AS(parse_mop_text(""), Error);
}

// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "opwlab/extraction.hpp"
#include "opwlab/extremal.hpp"
#include "opwlab/outerplanar.hpp"
#include "opwlab/width.hpp"

using namespace opw;

namespace {

int threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

bool certificate_ok(const Graph& g, const ExtractionCertificate& c, std::int64_t need) {
  return verify_certificate(g, c).ok && static_cast<std::int64_t>(c.selected.size()) >= need;
}

Outcome m_values() {
  Outcome o;
  MkResult m1 = compute_Mk(1, 6, threads());
  MkResult m2 = compute_Mk(2, 8, threads());
  o.expect(m1.status == MkResult::Status::Exact && m1.value == 2, "M_1 = " + std::to_string(m1.value));
  o.expect(m2.status == MkResult::Status::Exact && m2.value == 5, "M_2 = " + std::to_string(m2.value));
  if (o.ok) o.detail = "M_1 = 2, M_2 = 5";
  return o;
}

Outcome witness(int k, const Graph& core, int order, int ik) {
  Outcome o;
  Graph h = witness_graph(k, core);
  IkResult r = brute_force_Ik(h, k);
  o.expect(h.order() == order, "order " + std::to_string(h.order()));
  o.expect(r.size == ik, "I_k = " + std::to_string(r.size));
  o.expect(Rational(r.size, h.order()) == Rational(ik, order), "ratio");
  if (o.ok) o.detail = "I_" + std::to_string(k) + " = " + std::to_string(ik) + " of " + std::to_string(order) + ", ratio " +
                       Rational(ik, order).to_string();
  return o;
}

Outcome lower_bound_certificates() {
  Outcome o;
  std::size_t classes = 0;
  for (int n = 3; n <= 11; ++n)
    for (const Mop& m : enumerate_mops(n, true)) {
      Graph g = m.graph();
      ++classes;
      o.expect(certificate_ok(g, extract_general(g, 1, 2), ceil_div(2 * n, 5)), "general k=1 at n=" + std::to_string(n));
      o.expect(certificate_ok(g, extract_pw2(g), ceil_div(5 * n, 7)), "pw2 at n=" + std::to_string(n));
    }
  if (o.ok) o.detail = std::to_string(classes) + " classes, n <= 11";
  return o;
}

Outcome scale_soundness() {
  Outcome o;
  for (int n : {20, 50, 120})
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Graph g = random_mop(n, seed).graph();
      o.expect(certificate_ok(g, extract_pw2(g), ceil_div(5 * n, 7)),
               "n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    }
  if (o.ok) o.detail = "150 random Mops";
  return o;
}

Outcome anchored_small() {
  Outcome o;
  int pairs = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_all_graphs(n)) {
      if (!is_outerplanar(g)) continue;
      for (int v = 0; v < n; ++v, ++pairs) o.expect(anchored_pathwidth(g, v) <= 2, "anchored width above 2");
    }
  if (o.ok) o.detail = std::to_string(pairs) + " (graph, vertex) pairs";
  return o;
}

Outcome dual_chain() {
  Outcome o;
  std::size_t classes = 0;
  for (int n = 3; n <= 12; ++n)
    for (const Mop& m : enumerate_mops(n, true)) {
      ++classes;
      const int t = tree_pathwidth(weak_dual(m).tree);
      const int p = vs_pathwidth(m.graph()).width;
      o.expect(t + 1 <= p, "n=" + std::to_string(n) + ": pw(T)+1 = " + std::to_string(t + 1) + " > " + std::to_string(p));
    }
  if (o.ok) o.detail = std::to_string(classes) + " classes, n <= 12";
  return o;
}

Outcome minimal_trees() {
  Outcome o;
  Graph t2 = minimal_pw_tree(2, false);
  Graph t3 = minimal_pw_tree(3, true);
  o.expect(t2.order() == 7 && tree_pathwidth(t2) == 2 && vs_pathwidth(t2).width == 2, "pathwidth-2 tree");
  o.expect(t3.order() == 22 && t3.max_degree() == 3 && tree_pathwidth(t3) == 3 && vs_pathwidth(t3, threads()).width == 3,
           "pathwidth-3 tree");
  if (o.ok) o.detail = "orders 7 and 22";
  return o;
}

Outcome order24() {
  Outcome o;
  Order24Certificate c = order24_certificate(threads());
  o.expect(c.passed, "certificate rejected");
  o.expect(c.n == 24 && c.dual_bound == 4 && c.mop_pw >= 4, "n=" + std::to_string(c.n) + " pw=" + std::to_string(c.mop_pw));
  o.expect(validate_path_decomposition(c.mop.graph(), c.decomposition).width == c.mop_pw, "decomposition width");
  if (o.ok) o.detail = "24-vertex Mop of pathwidth " + std::to_string(c.mop_pw) + ", so M_3 <= 23";
  return o;
}

Outcome linear_forest() {
  Outcome o;
  std::size_t classes = 0;
  for (int n = 3; n <= 11; ++n)
    for (const Mop& m : enumerate_mops(n, true)) {
      ++classes;
      o.expect(brute_force_Ik(m.graph(), 1).size >= ceil_div(4 * n + 2, 7), "n=" + std::to_string(n));
    }
  if (o.ok) o.detail = std::to_string(classes) + " classes, n <= 11";
  return o;
}

Outcome engines() {
  Outcome o;
  int compared = 0;
  auto cmp = [&](const Graph& g) {
    ++compared;
    o.expect(vs_pathwidth(g).width == bag_search_min_width(g), "disagreement at n=" + std::to_string(g.order()));
  };
  for (int n = 3; n <= 10; ++n)
    for (const Mop& m : enumerate_mops(n, true)) cmp(m.graph());
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    cmp(random_graph(1 + static_cast<int>(seed % 8), 0.2 + 0.6 * static_cast<double>(seed % 7) / 6.0, seed));
  if (o.ok) o.detail = std::to_string(compared) + " graphs, zero disagreements";
  return o;
}

Outcome monotonicity() {
  Outcome o;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const int n = 6 + static_cast<int>(i % 9);
    Graph g = i % 2 == 0 ? random_mop(n, i).graph() : random_graph(n, 0.4, i);
    MonotonicityReport r = monotonicity_suite(g, 1 + static_cast<int>(i % 3), i);
    o.expect(r.violations.empty(), r.violations.empty() ? "" : r.violations.front());
  }
  if (o.ok) o.detail = "100 instances, zero violations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"M_1 = 2 and M_2 = 5 by exhaustive scan", m_values},
      {"k=1 witness: 10 vertices, I_1 = 6, ratio 3/5", [] { return witness(1, complete_graph(3), 10, 6); }},
      {"k=2 witness: 19 vertices, I_2 = 15, ratio 15/19", [] { return witness(2, triforce().graph(), 19, 15); }},
      {"extraction certificates on all Mop classes n <= 11", lower_bound_certificates},
      {"pathwidth-2 extraction on random Mops n in {20,50,120}", scale_soundness},
      {"anchored pathwidth <= 2 on outerplanar graphs n <= 5", anchored_small},
      {"pw(weak dual) + 1 <= pw(Mop) for n <= 12", dual_chain},
      {"minimal trees of pathwidth 2 and 3", minimal_trees},
      {"order-24 Mop of pathwidth 4", order24},
      {"I_1 >= ceil((4n+2)/7) on Mop classes n <= 11", linear_forest},
      {"subset DP agrees with bag search", engines},
      {"I_k monotonicity", monotonicity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("[%s] %2zu. %s (%s; %.3f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

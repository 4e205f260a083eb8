#include <algorithm>
#include <atomic>
#include <random>

#include "opwlab/error.hpp"
#include "opwlab/extremal.hpp"
#include "opwlab/parallel.hpp"

namespace opw {

std::optional<int> known_M(int k) {
  if (k == 1) return 2;
  if (k == 2) return 5;
  return std::nullopt;
}

MkResult compute_Mk(int k, int n_cap, int threads) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "k must be non-negative");
  if (n_cap < 1) fail(ErrorKind::InvalidArgument, "n_cap must be at least 1");
  if (n_cap > kMkMaxCap) fail(ErrorKind::Scope, "compute_Mk scans Mops only up to n = " + std::to_string(kMkMaxCap));
  MkResult out;
  out.k = k;
  auto exact = [&](int n, Graph witness) {
    out.status = MkResult::Status::Exact;
    out.value = n - 1;
    out.witness = std::move(witness);
  };
  // Order 1 has width 0, order 2 at most 1 (a single edge).
  out.scanned.emplace_back(1, 1);
  if (n_cap >= 2) {
    out.scanned.emplace_back(2, 1);
    if (k < 1) {
      exact(2, path_graph(2));
      return out;
    }
  }
  for (int n = 3; n <= n_cap; ++n) {
    std::vector<Mop> classes = enumerate_mops(n, true);
    out.scanned.emplace_back(n, classes.size());
    std::atomic<std::size_t> first_bad{classes.size()};
    parallel_for(classes.size(), threads, [&](std::size_t i) {
      if (i > first_bad.load()) return;
      if (!pathwidth_at_most(classes[i].graph(), k)) {
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
      }
    });
    if (first_bad < classes.size()) {
      exact(n, classes[first_bad].graph());
      out.witness_mop = classes[first_bad];
      return out;
    }
  }
  out.status = MkResult::Status::LowerBound;
  out.value = n_cap;
  return out;
}

Graph witness_graph(int k, const Graph& core) {
  auto M = known_M(k);
  if (!M) fail(ErrorKind::Precondition, "M_" + std::to_string(k) + " unknown");
  const int s = core.order();
  if (s != *M + 1)
    fail(ErrorKind::Precondition, "core must have M_k + 1 = " + std::to_string(*M + 1) + " vertices, got " +
                                      std::to_string(s));
  if (pathwidth_at_most(core, k))
    fail(ErrorKind::Precondition, "core has pathwidth at most " + std::to_string(k) + ", needs at least " +
                                      std::to_string(k + 1));
  if (!core.has_edge(0, 1)) fail(ErrorKind::Precondition, "core lacks the attachment edge {0,1}");
  std::vector<Edge> edges;
  const int x = 3 * s;
  for (int copy = 0; copy < 3; ++copy) {
    const int off = copy * s;
    for (const auto& e : core.edges()) edges.emplace_back(e.u + off, e.v + off);
    edges.emplace_back(x, off);
    edges.emplace_back(x, off + 1);
  }
  Graph h(3 * s + 1, edges);
  if (!is_outerplanar(h)) fail(ErrorKind::Precondition, "witness construction is not outerplanar for this core");
  return h;
}

Graph witness_graph(int k, const Mop& core) { return witness_graph(k, core.graph()); }

IkResult brute_force_Ik(const Graph& g, int k) {
  const int n = g.order();
  if (n > kIkMaxOrder) fail(ErrorKind::Scope, "brute_force_Ik is limited to n <= " + std::to_string(kIkMaxOrder));
  if (k < -1) fail(ErrorKind::InvalidArgument, "k must be at least -1");
  const auto adj = g.adjacency_masks();
  std::vector<Mask> obstructions;
  auto passes = [&](Mask s) { return layout_within_width(adj, s, k).has_value(); };
  for (int size = n; size >= 0; --size) {
    Mask s = low_mask(size);
    const Mask limit = bit(n);
    while (s < limit) {
      bool blocked = false;
      for (Mask o : obstructions)
        if ((s & o) == o) {
          blocked = true;
          break;
        }
      if (!blocked) {
        if (passes(s)) {
          IkResult out;
          out.size = size;
          out.witness_set = VertexSet::from_mask(n, s);
          out.decomposition = *decomposition_at_most(g, out.witness_set, k);
          return out;
        }
        // Shrink to an inclusion-minimal failing set; failing is inherited by supersets.
        Mask o = s;
        for (Mask rest = s; rest; rest &= rest - 1) {
          Mask v = rest & (~rest + 1);
          if (!passes(o & ~v)) o &= ~v;
        }
        obstructions.push_back(o);
      }
      if (s == 0) break;
      Mask c = s & (~s + 1);
      Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  fail(ErrorKind::Internal, "empty set failed the width check");
}

WitnessReport verify_witness(int k, std::optional<Graph> core) {
  WitnessReport out;
  out.k = k;
  auto M = known_M(k);
  if (!M) {
    out.skipped = true;
    out.skip_reason = "M_" + std::to_string(k) + " unknown";
    return out;
  }
  if (!core) core = (k == 1) ? Mop::triangle().graph() : triforce().graph();
  out.M = *M;
  out.graph = witness_graph(k, *core);
  out.order = out.graph.order();
  if (out.order > kIkMaxOrder) fail(ErrorKind::Scope, "witness graph too large for the exhaustive oracle");
  out.best = brute_force_Ik(out.graph, k);
  out.ik = out.best.size;
  out.ratio = Rational(out.ik, out.order);
  out.formula = Rational(out.M) / (Rational(out.M) + Rational(4, 3));
  out.passed = out.ik == 3 * out.M && out.order == 3 * out.M + 4 && out.ratio == out.formula;
  return out;
}

Order24Certificate order24_certificate(int threads) {
  Order24Certificate out;
  out.tree = minimal_pw_tree(3, true);
  out.tree_order = out.tree.order();
  out.tree_max_degree = out.tree.max_degree();
  out.tree_pw = tree_pathwidth(out.tree);
  out.mop = mop_from_dual_tree(out.tree);
  out.n = out.mop.order();
  out.dual_bound = tree_pathwidth(weak_dual(out.mop).tree) + 1;
  Graph g = out.mop.graph();
  PathwidthResult r = vs_pathwidth(g, threads);
  out.mop_pw = r.width;
  out.decomposition = layout_to_decomposition(g, r.layout);
  Validation v = validate_path_decomposition(g, out.decomposition);
  out.passed = out.n == 24 && out.tree_order == 22 && out.tree_max_degree <= 3 && out.tree_pw == 3 &&
               out.dual_bound == 4 && out.mop_pw >= 4 && v.ok() && v.width == out.mop_pw;
  return out;
}

MonotonicityReport monotonicity_suite(const Graph& g, int k, std::uint64_t seed) {
  if (g.order() > kMonotonicityMaxOrder)
    fail(ErrorKind::Scope, "monotonicity_suite is limited to n <= " + std::to_string(kMonotonicityMaxOrder));
  if (k < 0) fail(ErrorKind::InvalidArgument, "k must be non-negative");
  MonotonicityReport out;
  out.k = k;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(0.5);
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (keep(rng)) kept.push_back(e);
  out.spanning = Graph(g.order(), kept);
  out.ik = brute_force_Ik(g, k).size;
  out.ik_prev = brute_force_Ik(g, k - 1).size;
  out.ik_spanning = brute_force_Ik(out.spanning, k).size;
  if (out.ik < out.ik_prev)
    out.violations.push_back("I_" + std::to_string(k) + " = " + std::to_string(out.ik) + " < I_" +
                             std::to_string(k - 1) + " = " + std::to_string(out.ik_prev));
  if (out.ik > out.ik_spanning)
    out.violations.push_back("I_" + std::to_string(k) + "(G) = " + std::to_string(out.ik) +
                             " exceeds I_k of a spanning subgraph = " + std::to_string(out.ik_spanning));
  return out;
}

}  // namespace opw

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opwlab/graph.hpp"
#include "opwlab/outerplanar.hpp"
#include "opwlab/rational.hpp"
#include "opwlab/vertex_set.hpp"
#include "opwlab/width.hpp"

namespace opw {

// Values established by hand: M_1 = 2, M_2 = 5. nullopt for k >= 3.
std::optional<int> known_M(int k);

struct MkResult {
  enum class Status { Exact, LowerBound };
  int k = 0;
  Status status = Status::LowerBound;
  int value = 0;
  std::optional<Graph> witness;      // order value+1, pathwidth > k (Exact only)
  std::optional<Mop> witness_mop;    // same witness as a polygon triangulation when order >= 3
  std::vector<std::pair<int, std::size_t>> scanned;  // (order, classes examined)
};

constexpr int kMkMaxCap = kMopEnumerationMaxOrder;

// Scans orders 1, 2 and then every Mop class of order 3..n_cap. Maximal
// connected outerplanar graphs suffice because adding edges or joining
// components never lowers pathwidth.
MkResult compute_Mk(int k, int n_cap, int threads = 1);

// Three copies of `core` plus a vertex joined to the edge {0,1} of each copy.
Graph witness_graph(int k, const Graph& core);
Graph witness_graph(int k, const Mop& core);

constexpr int kIkMaxOrder = 20;

struct IkResult {
  int size = 0;
  VertexSet witness_set;
  PathDecomposition decomposition;  // in host vertex ids
};

// Largest induced subgraph of pathwidth <= k. Sizes are scanned downwards,
// subsets of one size in increasing bitmask order; minimal failing sets are
// remembered so supersets are skipped without a width check.
IkResult brute_force_Ik(const Graph& g, int k);

struct WitnessReport {
  int k = 0;
  bool skipped = false;
  std::string skip_reason;
  int M = 0;
  int order = 0;
  int ik = 0;
  Rational ratio;           // ik / order
  Rational formula;         // M / (M + 4/3)
  Graph graph;
  IkResult best;
  bool passed = false;
};

// core defaults to K_3 for k = 1 and the triforce for k = 2.
WitnessReport verify_witness(int k, std::optional<Graph> core = std::nullopt);

struct Order24Certificate {
  Graph tree;
  int tree_order = 0;
  int tree_max_degree = 0;
  int tree_pw = 0;
  Mop mop = Mop::triangle();
  int n = 0;
  int dual_bound = 0;  // tree_pw + 1
  int mop_pw = 0;      // subset DP
  PathDecomposition decomposition;
  bool passed = false;
};

Order24Certificate order24_certificate(int threads = 1);

struct MonotonicityReport {
  int k = 0;
  int ik = 0;
  int ik_prev = 0;       // I_{k-1}(G); only meaningful when k >= 1
  int ik_spanning = 0;   // I_k(H) for the sampled spanning subgraph H
  Graph spanning;
  std::vector<std::string> violations;
};

constexpr int kMonotonicityMaxOrder = 14;

MonotonicityReport monotonicity_suite(const Graph& g, int k, std::uint64_t seed);

}  // namespace opw

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opwlab/graph.hpp"

namespace opw {

// Ordered bags; each bag is a sorted list of host vertex ids.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  // max bag size - 1; an empty bag sequence counts as width -1.
  int width() const;
  PathDecomposition reversed() const;
  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

struct Layout {
  std::vector<int> order;
};

struct PathwidthResult {
  int width = -1;
  Layout layout;
};

constexpr int kVsMaxOrder = 26;
constexpr int kBagSearchMaxOrder = 14;

// Exact pathwidth through the vertex-separation subset DP. One byte per
// subset; `threads > 1` fills each popcount layer in parallel with results
// identical to the sequential fill.
PathwidthResult vs_pathwidth(const Graph& g, int threads = 1);

// Vertex-separation value of a fixed layout.
int layout_width(const Graph& g, const Layout& layout);

// Decision search: is pw(g[within]) <= k? Explores prefixes whose boundary
// never exceeds k; returns a realizing layout of `within` when one exists.
std::optional<Layout> layout_within_width(const std::vector<Mask>& adj, Mask within, int k);
bool pathwidth_at_most(const Graph& g, int k);

PathDecomposition layout_to_decomposition(const Graph& g, const Layout& layout);

// Width <= k decomposition of g[within] in g's vertex ids, or nullopt.
// g itself may be large; `within` is limited to 64 vertices.
std::optional<PathDecomposition> decomposition_at_most(const Graph& g, const VertexSet& within, int k);

enum class Clause { VertexRange, VertexCoverage, EdgeCoverage, Convexity };

struct Violation {
  Clause clause;
  std::string message;
  std::vector<int> witness;  // vertex ids and/or bag indices named by message
};

struct Validation {
  int width = -1;
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
};

Validation validate_path_decomposition(const Graph& g, const PathDecomposition& pd);

// Bag-state search: a width <= k decomposition whose LAST bag contains
// `anchor` (when given), or nullopt.
std::optional<PathDecomposition> bag_search_pathwidth(const Graph& g, int k,
                                                      std::optional<int> anchor = std::nullopt);
int bag_search_min_width(const Graph& g);
int anchored_pathwidth(const Graph& g, int v);

bool is_tree(const Graph& g);
int tree_pathwidth(const Graph& tree);

std::string to_dot(const PathDecomposition& pd);

}  // namespace opw

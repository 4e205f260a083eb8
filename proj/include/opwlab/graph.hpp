#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opwlab/vertex_set.hpp"

namespace opw {

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertex ids 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

  // Returns false when the edge was already present. Self-loops and
  // out-of-range ids throw InvalidArgument.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);

  std::vector<Edge> edges() const;
  int max_degree() const;

  // Neighborhood bitmasks; requires order() <= 64.
  std::vector<Mask> adjacency_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new id -> host id
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Components of g minus `removed`, each reported as a VertexSet over g's ids
// and ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
// new id of vertex v is perm[v]
Graph relabel(const Graph& g, std::span<const int> perm);

// Named families used throughout tests and reports.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center 0
Graph complete_bipartite(int a, int b);
Graph random_graph(int n, double edge_probability, std::uint64_t seed);
Graph random_tree(int n, std::uint64_t seed);

// ---- serialization -------------------------------------------------------

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

// "n m" header followed by m lines "u v".
ParsedGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view data);

// ---- isomorphism ---------------------------------------------------------

constexpr int kCanonicalMaxOrder = 16;

// Byte string equal for two graphs iff they are isomorphic (n <= 16).
std::string canonical_code(const Graph& g);

// One representative per isomorphism class on n <= 6 vertices, in order of
// first appearance when edge subsets are scanned as increasing bitmasks.
std::vector<Graph> enumerate_all_graphs(int n);

}  // namespace opw

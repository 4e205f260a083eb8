#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opwlab/graph.hpp"

namespace opw {

using Triangle = std::array<int, 3>;

// Maximal outerplanar graph as a triangulated convex polygon: vertices are
// outer-cycle positions 0..n-1 and chords are non-crossing diagonals.
class Mop {
 public:
  // Validates every invariant; throws InvalidArgument otherwise.
  Mop(int n, std::vector<Edge> chords);

  static Mop triangle() { return Mop(3, {}); }

  int order() const noexcept { return n_; }
  const std::vector<Edge>& chords() const noexcept { return chords_; }
  bool is_outer_edge(int u, int v) const;
  bool is_chord(int u, int v) const;

  Graph graph() const;
  // Triangular faces as sorted triples, in lexicographic order.
  std::vector<Triangle> triangles() const;
  std::vector<Triangle> internal_faces() const;

  friend bool operator==(const Mop&, const Mop&) = default;

 private:
  int n_;
  std::vector<Edge> chords_;  // sorted
};

bool chords_cross(const Edge& a, const Edge& b);

Mop triforce();       // hexagon with the internal triangle {0,2,4}
Mop fan(int n);       // all chords at vertex 0

// ---- recognition and completion -----------------------------------------

bool is_outerplanar(const Graph& g);

// A cyclic vertex order in which no two edges cross when drawn as chords of a
// convex polygon, or nullopt when g is not outerplanar.
std::optional<std::vector<int>> outerplanar_order(const Graph& g);

struct MopCompletion {
  Mop mop;
  std::vector<int> position;  // input vertex -> outer-cycle position
};

MopCompletion complete_to_mop(const Graph& g);

// Outer Hamiltonian cycle of an edge-maximal outerplanar graph.
std::vector<int> outer_cycle(const Graph& g);

// Converts an edge-maximal outerplanar graph into a Mop; `position` maps
// input vertices to cycle positions.
MopCompletion mop_from_maximal(const Graph& g);

// ---- weak dual ----------------------------------------------------------

struct DualTree {
  std::vector<Triangle> nodes;
  Graph tree;
};

DualTree weak_dual(const Mop& m);
Mop mop_from_dual_tree(const Graph& tree);

// ---- generation ---------------------------------------------------------

constexpr int kMopEnumerationMaxOrder = 16;

// Streams every triangulation of the convex n-gon; with up_to_iso only the
// dihedral-minimal labelling of each class is reported.
void for_each_mop(int n, bool up_to_iso, const std::function<void(const Mop&)>& visit);
std::vector<Mop> enumerate_mops(int n, bool up_to_iso);

// Dihedral-minimal relabelling of m (sorted chord list compared lexicographically).
Mop dihedral_canonical(const Mop& m);

std::uint64_t catalan(int k);  // exact for k <= 35

// Uniform over the labelled triangulations of the n-gon.
Mop random_mop(int n, std::uint64_t seed);

// Tree of order 2, 7, 22, 67 for p = 1..4 with pathwidth p.
Graph minimal_pw_tree(int p, bool degree_capped);

// ---- text format --------------------------------------------------------

std::string to_mop_text(const Mop& m);
Mop parse_mop_text(std::string_view text);

}  // namespace opw

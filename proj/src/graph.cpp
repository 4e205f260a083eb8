#include "opwlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "opwlab/error.hpp"

namespace opw {

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) fail(ErrorKind::InvalidArgument, "negative vertex-set universe");
  words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_mask(int universe, Mask mask) {
  if (universe > 64) fail(ErrorKind::InvalidArgument, "mask universe above 64");
  if ((mask & ~low_mask(universe)) != 0)
    fail(ErrorKind::InvalidArgument, "mask has members outside the universe");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::from_members(int universe, const std::vector<int>& members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_)
    fail(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " outside [0, " +
                                         std::to_string(universe_) + ")");
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
  }
  return out;
}

int VertexSet::smallest() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  return -1;
}

Mask VertexSet::to_mask() const {
  if (universe_ > 64) fail(ErrorKind::Scope, "vertex set does not fit a 64-bit mask");
  return words_.empty() ? 0 : words_[0];
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    fail(ErrorKind::InvalidArgument, "vertex sets over different universes");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& nu = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

bool Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    fail(ErrorKind::InvalidArgument, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                         "} outside [0, " + std::to_string(order()) + ")");
  if (u == v) fail(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return false;
  auto& nu = adj_[static_cast<std::size_t>(u)];
  nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<Mask> Graph::adjacency_masks() const {
  if (order() > 64) fail(ErrorKind::Scope, "adjacency masks need at most 64 vertices");
  std::vector<Mask> masks(adj_.size(), 0);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (int v : adj_[u]) masks[u] |= bit(v);
  return masks;
}

// ---- structural helpers ----------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order())
    fail(ErrorKind::InvalidArgument, "vertex set universe differs from graph order");
  return induced_subgraph(g, keep.members());
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  InducedSubgraph out;
  for (int v : keep) {
    if (v < 0 || v >= g.order())
      fail(ErrorKind::InvalidArgument, "induced subgraph vertex " + std::to_string(v) + " out of range");
    if (local[static_cast<std::size_t>(v)] != -1) continue;
    local[static_cast<std::size_t>(v)] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.to_original.size()));
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    for (int w : g.neighbors(out.to_original[i])) {
      int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
    }
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  if (removed.universe() != n)
    fail(ErrorKind::InvalidArgument, "removed-set universe differs from graph order");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : removed.members()) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<VertexSet> comps;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp(n);
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (int w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, VertexSet(g.order()));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    fail(ErrorKind::InvalidArgument, "relabeling has the wrong length");
  std::vector<char> hit(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || hit[static_cast<std::size_t>(p)])
      fail(ErrorKind::InvalidArgument, "relabeling is not a permutation");
    hit[static_cast<std::size_t>(p)] = 1;
  }
  Graph out(g.order());
  for (const auto& e : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cycles need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  return g;
}

}  // namespace opw

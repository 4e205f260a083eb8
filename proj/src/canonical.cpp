#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>

#include "opwlab/error.hpp"
#include "opwlab/graph.hpp"

namespace opw {
namespace {

// Colour refinement with canonical colour names: a colour is the rank of the
// (old colour, sorted neighbour colours) signature among all signatures, so
// isomorphic graphs receive identical colour multisets.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : n_(g.order()), adj_(g.adjacency_masks()), colour_(refine_colours(g)) {
    std::vector<int> sorted(colour_);
    std::sort(sorted.begin(), sorted.end());
    slot_colour_ = sorted;
    best_.fill(~std::uint32_t{0});
  }

  std::string run() {
    if (n_ > 0) descend(0, 0, false);
    std::string code;
    code.push_back(static_cast<char>(n_));
    for (int c : slot_colour_) code.push_back(static_cast<char>(c));
    for (int p = 1; p < n_; ++p) {
      code.push_back(static_cast<char>(best_[static_cast<std::size_t>(p)] >> 8));
      code.push_back(static_cast<char>(best_[static_cast<std::size_t>(p)] & 0xff));
    }
    return code;
  }

 private:
  // Column p of the upper triangle, position 0 as the most significant bit, so
  // numeric order equals lexicographic order of the bit string.
  std::uint32_t column(int p, int v) const {
    std::uint32_t col = 0;
    for (int q = 0; q < p; ++q) col = (col << 1) | ((adj_[static_cast<std::size_t>(placed_[static_cast<std::size_t>(q)])] >> v) & 1U);
    return col;
  }

  // Returns true when best_ was replaced somewhere below; the current prefix
  // then equals best_'s prefix again.
  bool descend(int p, Mask used, bool below) {
    if (p == n_) {
      if (below) best_ = current_;
      return below;
    }
    bool updated = false;
    const int want = slot_colour_[static_cast<std::size_t>(p)];
    Mask tried = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      if (colour_[static_cast<std::size_t>(v)] != want) continue;
      // A twin of an already tried vertex yields the same subtree.
      bool twin = false;
      for (Mask t = tried; t != 0 && !twin; t &= t - 1) {
        int u = lowest_bit(t);
        Mask a = adj_[static_cast<std::size_t>(u)] & ~bit(v);
        Mask b = adj_[static_cast<std::size_t>(v)] & ~bit(u);
        twin = (a == b);
      }
      if (twin) continue;
      tried |= bit(v);

      std::uint32_t col = column(p, v);
      bool now_below = below;
      if (!below) {
        if (col > best_[static_cast<std::size_t>(p)]) continue;
        if (col < best_[static_cast<std::size_t>(p)]) now_below = true;
      }
      current_[static_cast<std::size_t>(p)] = col;
      placed_[static_cast<std::size_t>(p)] = v;
      if (descend(p + 1, used | bit(v), now_below)) {
        updated = true;
        below = false;
      }
    }
    return updated;
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::array<int, kCanonicalMaxOrder> placed_{};
  std::array<std::uint32_t, kCanonicalMaxOrder> current_{};
  std::array<std::uint32_t, kCanonicalMaxOrder> best_{};
};

}  // namespace

std::string canonical_code(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    fail(ErrorKind::Scope, "canonical_code supports at most " + std::to_string(kCanonicalMaxOrder) +
                               " vertices (got " + std::to_string(g.order()) + ")");
  return CanonicalSearch(g).run();
}

std::vector<Graph> enumerate_all_graphs(int n) {
  if (n < 0 || n > 6) fail(ErrorKind::Scope, "enumerate_all_graphs supports 0 <= n <= 6");
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  const std::uint32_t total = std::uint32_t{1} << pairs.size();
  for (std::uint32_t subset = 0; subset < total; ++subset) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((subset >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace opw

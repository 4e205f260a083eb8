#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "opwlab/error.hpp"
#include "opwlab/width.hpp"

namespace opw {

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

PathDecomposition PathDecomposition::reversed() const {
  PathDecomposition out{bags};
  std::reverse(out.bags.begin(), out.bags.end());
  return out;
}

namespace {

inline int boundary(const std::vector<Mask>& adj, Mask prefix, Mask within) {
  int c = 0;
  const Mask outside = within & ~prefix;
  for (Mask s = prefix; s != 0; s &= s - 1)
    if (adj[static_cast<std::size_t>(lowest_bit(s))] & outside) ++c;
  return c;
}

inline std::uint8_t fill_one(const std::vector<Mask>& adj, Mask s, Mask full, const std::uint8_t* f) {
  std::uint8_t best = 0xff;
  for (Mask t = s; t != 0; t &= t - 1) {
    std::uint8_t sub = f[s & ~(t & -t)];
    if (sub < best) best = sub;
  }
  auto c = static_cast<std::uint8_t>(boundary(adj, s, full));
  return std::max(best, c);
}

// Binomial table for unranking combinations in colex order.
std::vector<std::vector<std::uint64_t>> binomials(int n) {
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n + 1),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j)
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          (j < i ? c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
  }
  return c;
}

Mask unrank_colex(std::uint64_t rank, int k, int n, const std::vector<std::vector<std::uint64_t>>& c) {
  Mask m = 0;
  int top = n - 1;
  for (int i = k; i >= 1; --i) {
    while (c[static_cast<std::size_t>(top)][static_cast<std::size_t>(i)] > rank) --top;
    m |= bit(top);
    rank -= c[static_cast<std::size_t>(top)][static_cast<std::size_t>(i)];
    --top;
  }
  return m;
}

inline Mask next_same_popcount(Mask x) {
  Mask c = x & -x;
  Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

PathwidthResult vs_pathwidth(const Graph& g, int threads) {
  const int n = g.order();
  if (n > kVsMaxOrder)
    fail(ErrorKind::Scope, "vs engine supports at most " + std::to_string(kVsMaxOrder) +
                               " vertices (got " + std::to_string(n) + ")");
  if (n == 0) return {-1, {}};
  const auto adj = g.adjacency_masks();
  const Mask full = low_mask(n);
  std::vector<std::uint8_t> f(std::size_t{1} << n, 0);

  if (threads <= 1 || n < 12) {
    for (Mask s = 1; s <= full; ++s) f[s] = fill_one(adj, s, full, f.data());
  } else {
    const auto c = binomials(n);
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t total = c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total));
      std::vector<std::thread> pool;
      for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t lo = total * w / workers;
        std::uint64_t hi = total * (w + 1) / workers;
        pool.emplace_back([&, lo, hi, k] {
          Mask s = unrank_colex(lo, k, n, c);
          for (std::uint64_t r = lo; r < hi; ++r) {
            f[s] = fill_one(adj, s, full, f.data());
            if (r + 1 < hi) s = next_same_popcount(s);
          }
        });
      }
      for (auto& t : pool) t.join();
    }
  }

  PathwidthResult out;
  out.width = f[full];
  out.layout.order.assign(static_cast<std::size_t>(n), -1);
  Mask s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    for (Mask t = s; t != 0; t &= t - 1) {
      int v = lowest_bit(t);
      if (f[s & ~bit(v)] <= f[s]) {
        out.layout.order[static_cast<std::size_t>(pos)] = v;
        s &= ~bit(v);
        break;
      }
    }
  }
  return out;
}

int layout_width(const Graph& g, const Layout& layout) {
  const int n = g.order();
  if (n == 0) return -1;
  std::vector<int> unplaced(static_cast<std::size_t>(n));
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) unplaced[static_cast<std::size_t>(v)] = g.degree(v);
  int active = 0;
  int best = 0;
  for (int v : layout.order) {
    placed[static_cast<std::size_t>(v)] = 1;
    for (int w : g.neighbors(v)) {
      if (!placed[static_cast<std::size_t>(w)]) continue;
      --unplaced[static_cast<std::size_t>(v)];
      if (--unplaced[static_cast<std::size_t>(w)] == 0) --active;
    }
    if (unplaced[static_cast<std::size_t>(v)] > 0) ++active;
    best = std::max(best, active);
  }
  return best;
}

namespace {

class WidthDecision {
 public:
  WidthDecision(const std::vector<Mask>& adj, Mask within, int k) : adj_(adj), within_(within), k_(k) {}

  std::optional<Layout> run() {
    if (search(0)) return Layout{order_};
    return std::nullopt;
  }

 private:
  bool search(Mask prefix) {
    const std::size_t mark = order_.size();
    // A vertex whose neighbours already lie in the prefix can be placed
    // immediately: the boundary never grows and no later prefix gets worse.
    bool grew = true;
    while (grew) {
      grew = false;
      for (Mask rest = within_ & ~prefix; rest != 0; rest &= rest - 1) {
        int v = lowest_bit(rest);
        if ((adj_[static_cast<std::size_t>(v)] & within_ & ~prefix) == 0) {
          prefix |= bit(v);
          order_.push_back(v);
          grew = true;
        }
      }
    }
    if (prefix == within_) return true;
    if (dead_.contains(prefix)) {
      order_.resize(mark);
      return false;
    }
    std::vector<std::pair<int, int>> moves;
    for (Mask rest = within_ & ~prefix; rest != 0; rest &= rest - 1) {
      int v = lowest_bit(rest);
      int c = boundary(adj_, prefix | bit(v), within_);
      if (c <= k_) moves.emplace_back(c, v);
    }
    std::sort(moves.begin(), moves.end());
    for (auto [c, v] : moves) {
      order_.push_back(v);
      if (search(prefix | bit(v))) return true;
      order_.pop_back();
    }
    dead_.insert(prefix);
    order_.resize(mark);
    return false;
  }

  const std::vector<Mask>& adj_;
  Mask within_;
  int k_;
  std::vector<int> order_;
  std::unordered_set<Mask> dead_;
};

}  // namespace

std::optional<Layout> layout_within_width(const std::vector<Mask>& adj, Mask within, int k) {
  if (within == 0) return k >= -1 ? std::optional<Layout>(Layout{}) : std::nullopt;
  if (k < 0) return std::nullopt;
  return WidthDecision(adj, within, k).run();
}

bool pathwidth_at_most(const Graph& g, int k) {
  return layout_within_width(g.adjacency_masks(), low_mask(g.order()), k).has_value();
}

PathDecomposition layout_to_decomposition(const Graph& g, const Layout& layout) {
  const int n = g.order();
  if (static_cast<int>(layout.order.size()) != n)
    fail(ErrorKind::InvalidArgument, "layout length differs from graph order");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = layout.order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
      fail(ErrorKind::InvalidArgument, "layout is not a permutation of the vertices");
    pos[static_cast<std::size_t>(v)] = i;
  }
  if (n == 0) return PathDecomposition{{{}}};
  std::vector<int> last(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v))
      last[static_cast<std::size_t>(v)] = std::max(last[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(w)]);

  PathDecomposition pd;
  std::vector<int> active;
  for (int i = 0; i < n; ++i) {
    int v = layout.order[static_cast<std::size_t>(i)];
    std::erase_if(active, [&](int u) { return last[static_cast<std::size_t>(u)] < i; });
    std::vector<int> bag = active;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    while (!pd.bags.empty() && std::includes(bag.begin(), bag.end(), pd.bags.back().begin(), pd.bags.back().end()))
      pd.bags.pop_back();
    pd.bags.push_back(std::move(bag));
    active.push_back(v);
  }
  return pd;
}

std::optional<PathDecomposition> decomposition_at_most(const Graph& g, const VertexSet& within, int k) {
  if (within.size() > 64) fail(ErrorKind::Scope, "decomposition_at_most handles at most 64 vertices");
  InducedSubgraph sub = induced_subgraph(g, within);
  auto layout = layout_within_width(sub.graph.adjacency_masks(), low_mask(sub.graph.order()), k);
  if (!layout) return std::nullopt;
  PathDecomposition pd = layout_to_decomposition(sub.graph, *layout);
  for (auto& bag : pd.bags) {
    for (int& v : bag) v = sub.to_original[static_cast<std::size_t>(v)];
    std::sort(bag.begin(), bag.end());
  }
  return pd;
}

Validation validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  const int n = g.order();
  Validation out;
  std::vector<std::vector<int>> where(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    std::vector<int> bag = pd.bags[i];
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    out.width = std::max(out.width, static_cast<int>(bag.size()) - 1);
    for (int v : bag) {
      if (v < 0 || v >= n) {
        out.violation = Violation{Clause::VertexRange,
                                  "bag " + std::to_string(i) + " names vertex " + std::to_string(v) +
                                      " outside [0, " + std::to_string(n) + ")",
                                  {v, static_cast<int>(i)}};
        return out;
      }
      where[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
  }
  for (int v = 0; v < n; ++v) {
    if (where[static_cast<std::size_t>(v)].empty()) {
      out.violation = Violation{Clause::VertexCoverage, "vertex " + std::to_string(v) + " is in no bag", {v}};
      return out;
    }
  }
  for (const auto& e : g.edges()) {
    const auto& a = where[static_cast<std::size_t>(e.u)];
    const auto& b = where[static_cast<std::size_t>(e.v)];
    std::size_t i = 0;
    std::size_t j = 0;
    bool shared = false;
    while (i < a.size() && j < b.size() && !shared) {
      if (a[i] == b[j]) shared = true;
      else if (a[i] < b[j]) ++i;
      else ++j;
    }
    if (!shared) {
      out.violation = Violation{Clause::EdgeCoverage,
                                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is uncovered",
                                {e.u, e.v}};
      return out;
    }
  }
  for (int v = 0; v < n; ++v) {
    const auto& idx = where[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
      if (idx[i + 1] != idx[i] + 1) {
        out.violation = Violation{Clause::Convexity,
                                  "vertex " + std::to_string(v) + " is in bags " + std::to_string(idx[i]) +
                                      " and " + std::to_string(idx[i + 1]) + " but not in bag " +
                                      std::to_string(idx[i] + 1),
                                  {v, idx[i], idx[i] + 1, idx[i + 1]}};
        return out;
      }
    }
  }
  return out;
}

std::string to_dot(const PathDecomposition& pd) {
  std::ostringstream os;
  os << "graph decomposition {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    os << "  b" << i << " [label=\"";
    for (std::size_t j = 0; j < pd.bags[i].size(); ++j) os << (j ? " " : "") << pd.bags[i][j];
    os << "\"];\n";
  }
  for (std::size_t i = 0; i + 1 < pd.bags.size(); ++i) os << "  b" << i << " -- b" << i + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace opw

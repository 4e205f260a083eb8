#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "opwlab/error.hpp"
#include "opwlab/outerplanar.hpp"
#include "opwlab/width.hpp"

namespace opw {

Mop::Mop(int n, std::vector<Edge> chords) : n_(n), chords_(std::move(chords)) {
  if (n_ < 3) fail(ErrorKind::InvalidArgument, "a Mop needs at least 3 vertices");
  if (static_cast<int>(chords_.size()) != n_ - 3)
    fail(ErrorKind::InvalidArgument, "a Mop on " + std::to_string(n_) + " vertices has " + std::to_string(n_ - 3) +
                                         " chords, got " + std::to_string(chords_.size()));
  std::sort(chords_.begin(), chords_.end());
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    const Edge& c = chords_[i];
    if (c.u < 0 || c.v >= n_) fail(ErrorKind::InvalidArgument, "chord endpoint out of range");
    if (is_outer_edge(c.u, c.v))
      fail(ErrorKind::InvalidArgument, "chord {" + std::to_string(c.u) + "," + std::to_string(c.v) + "} is an outer edge");
    if (i > 0 && chords_[i - 1] == c) fail(ErrorKind::InvalidArgument, "duplicate chord");
  }
  // Chords sorted by left end: a crossing pair (a,b), (c,d) with a < c < b < d
  // is caught by scanning an open-interval stack.
  std::vector<int> open;
  std::vector<std::vector<int>> ends_at(static_cast<std::size_t>(n_));
  for (const auto& c : chords_) ends_at[static_cast<std::size_t>(c.u)].push_back(c.v);
  for (int x = 0; x < n_; ++x) {
    while (!open.empty() && open.back() <= x) {
      open.pop_back();
    }
    auto& ends = ends_at[static_cast<std::size_t>(x)];
    std::sort(ends.rbegin(), ends.rend());
    for (int e : ends) {
      if (!open.empty() && e > open.back())
        fail(ErrorKind::InvalidArgument, "chords cross at vertex " + std::to_string(x));
      open.push_back(e);
    }
  }
}

bool Mop::is_outer_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  Edge e(u, v);
  return e.v - e.u == 1 || (e.u == 0 && e.v == n_ - 1);
}

bool Mop::is_chord(int u, int v) const {
  if (u == v) return false;
  return std::binary_search(chords_.begin(), chords_.end(), Edge(u, v));
}

Graph Mop::graph() const {
  std::vector<Edge> edges;
  for (int i = 0; i < n_; ++i) edges.emplace_back(i, (i + 1) % n_);
  edges.insert(edges.end(), chords_.begin(), chords_.end());
  return Graph(n_, edges);
}

std::vector<Triangle> Mop::triangles() const {
  Graph g = graph();
  std::vector<Triangle> out;
  for (int u = 0; u < n_; ++u) {
    const auto& nu = g.neighbors(u);
    for (int v : nu) {
      if (v <= u) continue;
      for (int w : nu) {
        if (w <= v) continue;
        if (g.has_edge(v, w)) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

std::vector<Triangle> Mop::internal_faces() const {
  std::vector<Triangle> out;
  for (const auto& t : triangles())
    if (!is_outer_edge(t[0], t[1]) && !is_outer_edge(t[1], t[2]) && !is_outer_edge(t[0], t[2])) out.push_back(t);
  return out;
}

bool chords_cross(const Edge& a, const Edge& b) {
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

Mop triforce() { return Mop(6, {{0, 2}, {2, 4}, {0, 4}}); }

Mop fan(int n) {
  std::vector<Edge> chords;
  for (int j = 2; j <= n - 2; ++j) chords.emplace_back(0, j);
  return Mop(n, std::move(chords));
}

DualTree weak_dual(const Mop& m) {
  DualTree out;
  out.nodes = m.triangles();
  std::map<Edge, std::vector<int>> by_chord;
  for (std::size_t t = 0; t < out.nodes.size(); ++t) {
    const auto& tri = out.nodes[t];
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}})
      if (m.is_chord(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>(j)]))
        by_chord[Edge(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>(j)])].push_back(static_cast<int>(t));
  }
  std::vector<Edge> edges;
  for (const auto& [chord, ts] : by_chord) {
    if (ts.size() != 2)
      fail(ErrorKind::Internal, "chord {" + std::to_string(chord.u) + "," + std::to_string(chord.v) + "} borders " +
                                    std::to_string(ts.size()) + " triangles");
    edges.emplace_back(ts[0], ts[1]);
  }
  out.tree = Graph(static_cast<int>(out.nodes.size()), edges);
  if (static_cast<int>(out.nodes.size()) != m.order() - 2 || !is_tree(out.tree))
    fail(ErrorKind::Internal, "weak dual is not a tree on n-2 nodes");
  return out;
}

Mop mop_from_dual_tree(const Graph& tree) {
  if (!is_tree(tree)) fail(ErrorKind::InvalidArgument, "mop_from_dual_tree needs a tree");
  if (tree.max_degree() > 3) fail(ErrorKind::InvalidArgument, "dual tree has a node of degree > 3");
  const int t = tree.order();
  const int n = t + 2;
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  next[0] = 1;
  next[1] = 2;
  next[2] = 0;
  int fresh = 3;
  // Free sides of each placed triangle, stored as (a, b) with next[a] == b.
  std::vector<std::vector<std::pair<int, int>>> sides(static_cast<std::size_t>(t));
  sides[0] = {{0, 1}, {1, 2}, {2, 0}};
  std::vector<Edge> tri_edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<int> queue{0};
  std::vector<char> seen(static_cast<std::size_t>(t), 0);
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    std::size_t side = 0;
    for (int y : tree.neighbors(x)) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      auto [a, b] = sides[static_cast<std::size_t>(x)][side++];
      const int v = fresh++;
      next[static_cast<std::size_t>(a)] = v;
      next[static_cast<std::size_t>(v)] = b;
      sides[static_cast<std::size_t>(y)] = {{a, v}, {v, b}};
      tri_edges.emplace_back(a, v);
      tri_edges.emplace_back(v, b);
      queue.push_back(y);
    }
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  int x = 0;
  for (int i = 0; i < n; ++i, x = next[static_cast<std::size_t>(x)]) position[static_cast<std::size_t>(x)] = i;
  std::vector<Edge> chords;
  for (const auto& e : tri_edges) {
    Edge c(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
    if (c.v - c.u == 1 || (c.u == 0 && c.v == n - 1)) continue;
    chords.push_back(c);
  }
  std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
  return Mop(n, std::move(chords));
}

namespace {

std::vector<Edge> dihedral_image(const std::vector<Edge>& chords, int n, int r, bool reflect) {
  std::vector<Edge> out;
  out.reserve(chords.size());
  for (const auto& c : chords) {
    auto f = [&](int x) { return reflect ? ((r - x) % n + n) % n : (x + r) % n; };
    out.emplace_back(f(c.u), f(c.v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dihedral_minimal(const Mop& m) {
  const int n = m.order();
  const auto& chords = m.chords();
  for (int refl = 0; refl < 2; ++refl)
    for (int r = 0; r < n; ++r) {
      if (!refl && r == 0) continue;
      if (dihedral_image(chords, n, r, refl != 0) < chords) return false;
    }
  return true;
}

struct Enumerator {
  int n;
  bool up_to_iso;
  const std::function<void(const Mop&)>& visit;
  std::vector<Edge> chords;
  std::vector<std::pair<int, int>> pending;

  void run() {
    if (pending.empty()) {
      Mop m(n, chords);
      if (!up_to_iso || is_dihedral_minimal(m)) visit(m);
      return;
    }
    auto [i, j] = pending.back();
    pending.pop_back();
    for (int k = i + 1; k < j; ++k) {
      const std::size_t mark_c = chords.size();
      const std::size_t mark_p = pending.size();
      if (k - i >= 2) {
        chords.emplace_back(i, k);
        pending.emplace_back(i, k);
      }
      if (j - k >= 2) {
        chords.emplace_back(k, j);
        pending.emplace_back(k, j);
      }
      run();
      chords.resize(mark_c);
      pending.resize(mark_p);
    }
    pending.emplace_back(i, j);
  }
};

long double log_catalan(int k) {
  return std::lgamma(2.0L * k + 1) - std::lgamma(k + 1.0L) - std::lgamma(k + 2.0L);
}

}  // namespace

void for_each_mop(int n, bool up_to_iso, const std::function<void(const Mop&)>& visit) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "Mop enumeration needs n >= 3");
  if (n > kMopEnumerationMaxOrder)
    fail(ErrorKind::Scope, "Mop enumeration is limited to n <= " + std::to_string(kMopEnumerationMaxOrder));
  Enumerator e{n, up_to_iso, visit, {}, {{0, n - 1}}};
  e.run();
}

std::vector<Mop> enumerate_mops(int n, bool up_to_iso) {
  std::vector<Mop> out;
  for_each_mop(n, up_to_iso, [&](const Mop& m) { out.push_back(m); });
  return out;
}

Mop dihedral_canonical(const Mop& m) {
  const int n = m.order();
  std::vector<Edge> best = m.chords();
  for (int refl = 0; refl < 2; ++refl)
    for (int r = 0; r < n; ++r) best = std::min(best, dihedral_image(m.chords(), n, r, refl != 0));
  return Mop(n, std::move(best));
}

std::uint64_t catalan(int k) {
  if (k < 0 || k > 35) fail(ErrorKind::Scope, "catalan(k) is exact only for 0 <= k <= 35");
  unsigned __int128 c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * static_cast<unsigned>(i) + 1) / (static_cast<unsigned>(i) + 2);
  return static_cast<std::uint64_t>(c);
}

Mop random_mop(int n, std::uint64_t seed) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "random_mop needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> chords;
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  while (!pending.empty()) {
    auto [i, j] = pending.back();
    pending.pop_back();
    const int m = j - i + 1;  // polygon on vertices i..j, base side (i, j)
    if (m < 3) continue;
    // Apex k splits into polygons of k-i+1 and j-k+1 vertices.
    int k = i + 1;
    if (m - 2 <= 35) {
      std::uint64_t total = catalan(m - 2);
      std::uint64_t pick = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
      for (k = i + 1; k < j; ++k) {
        unsigned __int128 w = static_cast<unsigned __int128>(catalan(k - i - 1)) * catalan(j - k - 1);
        if (pick < w) break;
        pick -= static_cast<std::uint64_t>(w);
      }
    } else {
      std::vector<long double> logw;
      for (int a = i + 1; a < j; ++a) logw.push_back(log_catalan(a - i - 1) + log_catalan(j - a - 1));
      const long double top = *std::max_element(logw.begin(), logw.end());
      std::vector<double> w;
      for (auto lw : logw) w.push_back(static_cast<double>(std::exp(lw - top)));
      std::discrete_distribution<int> d(w.begin(), w.end());
      k = i + 1 + d(rng);
    }
    if (k - i >= 2) {
      chords.emplace_back(i, k);
      pending.emplace_back(i, k);
    }
    if (j - k >= 2) {
      chords.emplace_back(k, j);
      pending.emplace_back(k, j);
    }
  }
  return Mop(n, std::move(chords));
}

Graph minimal_pw_tree(int p, bool degree_capped) {
  if (p < 1 || p > 4) fail(ErrorKind::InvalidArgument, "minimal_pw_tree is defined for p in 1..4");
  if (p == 1) return path_graph(2);
  Graph sub = minimal_pw_tree(p - 1, degree_capped);
  const int s = sub.order();
  int attach = 0;
  if (degree_capped) {
    attach = -1;
    for (int v = 0; v < s && attach < 0; ++v)
      if (sub.degree(v) == 1) attach = v;
  }
  std::vector<Edge> edges;
  for (int copy = 0; copy < 3; ++copy) {
    const int off = 1 + copy * s;
    for (const auto& e : sub.edges()) edges.emplace_back(e.u + off, e.v + off);
    edges.emplace_back(0, attach + off);
  }
  return Graph(1 + 3 * s, edges);
}

std::string to_mop_text(const Mop& m) {
  std::ostringstream out;
  out << "mop " << m.order() << '\n';
  for (const auto& c : m.chords()) out << c.u << ' ' << c.v << '\n';
  return out.str();
}

Mop parse_mop_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> chords;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    auto bad = [&](const std::string& why) {
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + why);
    };
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "mop" || n < 3) bad("expected header \"mop n\" with n >= 3");
    } else {
      int a = 0;
      int b = 0;
      if (!(ls >> a >> b)) bad("expected a chord \"i j\"");
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) bad("chord endpoint out of range");
      chords.emplace_back(a, b);
    }
    std::string extra;
    if (ls >> extra) bad("unexpected trailing token '" + extra + "'");
  }
  if (n < 0) fail(ErrorKind::Parse, "missing \"mop n\" header");
  try {
    return Mop(n, std::move(chords));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) fail(ErrorKind::Parse, e.what());
    throw;
  }
}

}  // namespace opw

#include <algorithm>
#include <deque>
#include <set>

#include "opwlab/error.hpp"
#include "opwlab/outerplanar.hpp"

namespace opw {
namespace {

struct Blocks {
  std::vector<std::vector<Edge>> edges;        // per block, host ids
  std::vector<std::vector<int>> blocks_of;     // per vertex
};

// Biconnected components by the iterative edge-stack variant of Tarjan's DFS.
Blocks biconnected_blocks(const Graph& g) {
  const int n = g.order();
  Blocks out;
  out.blocks_of.resize(static_cast<std::size_t>(n));
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  int clock = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        int w = nb[f.next++];
        if (disc[static_cast<std::size_t>(w)] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = clock++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const int v = f.v;
      const int parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(parent)]) {
        const Edge tree_edge(parent, v);
        std::vector<Edge> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        const int id = static_cast<int>(out.edges.size());
        std::set<int> verts;
        for (const auto& e : block) {
          verts.insert(e.u);
          verts.insert(e.v);
        }
        for (int x : verts) out.blocks_of[static_cast<std::size_t>(x)].push_back(id);
        out.edges.push_back(std::move(block));
      }
    }
  }
  return out;
}

// Outer Hamiltonian cycle of one 2-connected block, or nullopt when the block
// is not outerplanar. Degree-2 vertices are suppressed one at a time; the
// edge joining the two neighbours must lie on the outer cycle of the smaller
// graph, so an edge asked to carry a second suppressed vertex refutes
// outerplanarity (unless only the final triangle remains).
std::optional<std::vector<int>> block_cycle(const std::vector<int>& verts, const std::vector<Edge>& edges,
                                            std::vector<int>& local) {
  const int b = static_cast<int>(verts.size());
  if (b == 2) return verts;
  if (static_cast<int>(edges.size()) > 2 * b - 3) return std::nullopt;
  for (int i = 0; i < b; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
  std::vector<std::set<int>> adj(static_cast<std::size_t>(b));
  for (const auto& e : edges) {
    int u = local[static_cast<std::size_t>(e.u)];
    int v = local[static_cast<std::size_t>(e.v)];
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  std::set<Edge> marked;
  std::deque<int> queue;
  for (int v = 0; v < b; ++v)
    if (adj[static_cast<std::size_t>(v)].size() == 2) queue.push_back(v);
  std::vector<char> removed(static_cast<std::size_t>(b), 0);
  std::vector<std::array<int, 3>> history;
  int remaining = b;
  while (remaining > 3) {
    int v = -1;
    while (!queue.empty() && v < 0) {
      int c = queue.front();
      queue.pop_front();
      if (!removed[static_cast<std::size_t>(c)] && adj[static_cast<std::size_t>(c)].size() == 2) v = c;
    }
    if (v < 0) return std::nullopt;
    auto it = adj[static_cast<std::size_t>(v)].begin();
    const int u = *it++;
    const int w = *it;
    const Edge uw(u, w);
    if (adj[static_cast<std::size_t>(u)].contains(w)) {
      if (marked.contains(uw)) return std::nullopt;
    } else {
      adj[static_cast<std::size_t>(u)].insert(w);
      adj[static_cast<std::size_t>(w)].insert(u);
    }
    marked.insert(uw);
    marked.erase(Edge(u, v));
    marked.erase(Edge(v, w));
    adj[static_cast<std::size_t>(u)].erase(v);
    adj[static_cast<std::size_t>(w)].erase(v);
    adj[static_cast<std::size_t>(v)].clear();
    removed[static_cast<std::size_t>(v)] = 1;
    --remaining;
    history.push_back({v, u, w});
    for (int x : {u, w}) {
      auto d = adj[static_cast<std::size_t>(x)].size();
      if (d < 2) return std::nullopt;
      if (d == 2) queue.push_back(x);
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < b; ++v)
    if (!removed[static_cast<std::size_t>(v)]) rest.push_back(v);
  for (int i = 0; i < 3; ++i)
    if (!adj[static_cast<std::size_t>(rest[static_cast<std::size_t>(i)])].contains(rest[static_cast<std::size_t>((i + 1) % 3)]))
      return std::nullopt;
  std::vector<int> next(static_cast<std::size_t>(b), -1);
  next[static_cast<std::size_t>(rest[0])] = rest[1];
  next[static_cast<std::size_t>(rest[1])] = rest[2];
  next[static_cast<std::size_t>(rest[2])] = rest[0];
  for (auto h = history.rbegin(); h != history.rend(); ++h) {
    auto [v, u, w] = *h;
    if (next[static_cast<std::size_t>(u)] == w) {
      next[static_cast<std::size_t>(v)] = w;
      next[static_cast<std::size_t>(u)] = v;
    } else if (next[static_cast<std::size_t>(w)] == u) {
      next[static_cast<std::size_t>(v)] = u;
      next[static_cast<std::size_t>(w)] = v;
    } else {
      fail(ErrorKind::Internal, "outer-cycle reconstruction lost a suppressed edge");
    }
  }
  std::vector<int> cycle;
  int x = 0;
  do {
    cycle.push_back(verts[static_cast<std::size_t>(x)]);
    x = next[static_cast<std::size_t>(x)];
  } while (x != 0);
  return cycle;
}

void fan_faces(std::vector<int> polygon, const std::set<Edge>& chords, std::vector<Edge>& added) {
  while (polygon.size() > 3) {
    const std::size_t m = polygon.size();
    std::size_t split_a = m;
    std::size_t split_b = m;
    for (std::size_t i = 0; i < m && split_a == m; ++i) {
      for (std::size_t j = i + 2; j < m; ++j) {
        if (i == 0 && j == m - 1) continue;
        if (chords.contains(Edge(polygon[i], polygon[j]))) {
          split_a = i;
          split_b = j;
          break;
        }
      }
    }
    if (split_a == m) {
      for (std::size_t j = 2; j + 1 < m; ++j) added.emplace_back(polygon[0], polygon[j]);
      return;
    }
    std::vector<int> inner(polygon.begin() + static_cast<std::ptrdiff_t>(split_a),
                           polygon.begin() + static_cast<std::ptrdiff_t>(split_b) + 1);
    fan_faces(std::move(inner), chords, added);
    std::vector<int> outer(polygon.begin(), polygon.begin() + static_cast<std::ptrdiff_t>(split_a) + 1);
    outer.insert(outer.end(), polygon.begin() + static_cast<std::ptrdiff_t>(split_b), polygon.end());
    polygon = std::move(outer);
  }
}

}  // namespace

std::optional<std::vector<int>> outerplanar_order(const Graph& g) {
  const int n = g.order();
  if (n >= 2 && g.size() > static_cast<std::size_t>(2 * n - 3)) return std::nullopt;
  Blocks blocks = biconnected_blocks(g);
  std::vector<std::vector<int>> cycles(blocks.edges.size());
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.edges.size(); ++b) {
    std::set<int> vs;
    for (const auto& e : blocks.edges[b]) {
      vs.insert(e.u);
      vs.insert(e.v);
    }
    auto cyc = block_cycle(std::vector<int>(vs.begin(), vs.end()), blocks.edges[b], local);
    if (!cyc) return std::nullopt;
    cycles[b] = std::move(*cyc);
  }
  // Each block's cycle is laid out starting at the vertex that reached it
  // first, and every vertex's further blocks are nested right after it.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<char> done(cycles.size(), 0);
  for (int r = 0; r < n; ++r) {
    if (placed[static_cast<std::size_t>(r)]) continue;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      placed[static_cast<std::size_t>(x)] = 1;
      order.push_back(x);
      std::vector<int> children;
      for (int b : blocks.blocks_of[static_cast<std::size_t>(x)]) {
        if (done[static_cast<std::size_t>(b)]) continue;
        done[static_cast<std::size_t>(b)] = 1;
        const auto& cyc = cycles[static_cast<std::size_t>(b)];
        auto at = std::find(cyc.begin(), cyc.end(), x);
        const auto start = static_cast<std::size_t>(at - cyc.begin());
        for (std::size_t i = 1; i < cyc.size(); ++i) children.push_back(cyc[(start + i) % cyc.size()]);
      }
      stack.insert(stack.end(), children.rbegin(), children.rend());
    }
  }
  return order;
}

bool is_outerplanar(const Graph& g) { return outerplanar_order(g).has_value(); }

MopCompletion complete_to_mop(const Graph& g) {
  const int n = g.order();
  if (n < 3) fail(ErrorKind::InvalidArgument, "complete_to_mop needs at least 3 vertices");
  auto order = outerplanar_order(g);
  if (!order) fail(ErrorKind::NotOuterplanar, "graph is not outerplanar");
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>((*order)[static_cast<std::size_t>(i)])] = i;

  std::set<Edge> chords;
  for (const auto& e : g.edges()) {
    Edge c(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
    if (c.v - c.u == 1 || (c.u == 0 && c.v == n - 1)) continue;
    chords.insert(c);
  }
  // Fanning each face from its smallest corner is exactly what a
  // lexicographic greedy scan over candidate diagonals produces.
  std::vector<int> polygon(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) polygon[static_cast<std::size_t>(i)] = i;
  std::vector<Edge> added;
  fan_faces(polygon, chords, added);
  std::vector<Edge> all(chords.begin(), chords.end());
  all.insert(all.end(), added.begin(), added.end());
  return {Mop(n, std::move(all)), std::move(position)};
}

std::vector<int> outer_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) fail(ErrorKind::InvalidArgument, "outer_cycle needs at least 3 vertices");
  if (g.size() != static_cast<std::size_t>(2 * n - 3))
    fail(ErrorKind::NotOuterplanar, "graph is not maximal outerplanar (edge count " + std::to_string(g.size()) +
                                        ", expected " + std::to_string(2 * n - 3) + ")");
  if (n == 3) return {0, 1, 2};
  std::vector<std::vector<int>> ring(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    const auto& a = g.neighbors(e.u);
    const auto& b = g.neighbors(e.v);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() == 1) {
      ring[static_cast<std::size_t>(e.u)].push_back(e.v);
      ring[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
  }
  for (const auto& r : ring)
    if (r.size() != 2) fail(ErrorKind::NotOuterplanar, "edges lying in one triangle do not form a Hamiltonian cycle");
  std::vector<int> cycle{0};
  int prev = 0;
  int cur = std::min(ring[0][0], ring[0][1]);
  while (cur != 0) {
    cycle.push_back(cur);
    const auto& r = ring[static_cast<std::size_t>(cur)];
    int nxt = r[0] == prev ? r[1] : r[0];
    prev = cur;
    cur = nxt;
    if (static_cast<int>(cycle.size()) > n) break;
  }
  if (static_cast<int>(cycle.size()) != n)
    fail(ErrorKind::NotOuterplanar, "edges lying in one triangle do not form a Hamiltonian cycle");
  return cycle;
}

MopCompletion mop_from_maximal(const Graph& g) {
  auto cycle = outer_cycle(g);
  const int n = g.order();
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = i;
  std::vector<Edge> chords;
  for (const auto& e : g.edges()) {
    Edge c(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
    if (c.v - c.u == 1 || (c.u == 0 && c.v == n - 1)) continue;
    chords.push_back(c);
  }
  try {
    return {Mop(n, std::move(chords)), std::move(position)};
  } catch (const Error& e) {
    fail(ErrorKind::NotOuterplanar, std::string("graph is not maximal outerplanar: ") + e.what());
  }
}

}  // namespace opw

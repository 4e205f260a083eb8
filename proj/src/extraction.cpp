#include <algorithm>
#include <map>
#include <mutex>

#include "opwlab/error.hpp"
#include "opwlab/extraction.hpp"

namespace opw {

std::string to_string(TraceStep::Rule rule) {
  switch (rule) {
    case TraceStep::Rule::Base: return "base";
    case TraceStep::Rule::Exact: return "exact";
    case TraceStep::Rule::Split: return "split";
    case TraceStep::Rule::TakeAll: return "take-all";
    case TraceStep::Rule::Fallback: return "fallback";
  }
  return "?";
}

std::optional<TraceStep::Rule> rule_from_string(const std::string& name) {
  for (auto r : {TraceStep::Rule::Base, TraceStep::Rule::Exact, TraceStep::Rule::Split, TraceStep::Rule::TakeAll,
                 TraceStep::Rule::Fallback})
    if (to_string(r) == name) return r;
  return std::nullopt;
}

Rational extraction_bound(ExtractionCertificate::Method method, int M, int n) {
  if (method == ExtractionCertificate::Method::Pw2) return Rational(5 * n, 7);
  return Rational(static_cast<std::int64_t>(M) * n, M + 3);
}

bool M_holds(int k, int M) {
  if (M < 1) fail(ErrorKind::InvalidArgument, "M must be at least 1");
  if (M > kMCheckMaxOrder) fail(ErrorKind::Scope, "M can be checked only up to " + std::to_string(kMCheckMaxOrder));
  static std::mutex mu;
  static std::map<std::pair<int, int>, bool> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({k, M}); it != cache.end()) return it->second;
  }
  bool ok = k >= 0 && (M < 2 || k >= 1);
  for (int n = 3; ok && n <= M; ++n)
    for_each_mop(n, true, [&](const Mop& m) {
      if (ok && !pathwidth_at_most(m.graph(), k)) ok = false;
    });
  std::lock_guard lock(mu);
  cache[{k, M}] = ok;
  return ok;
}

namespace {

struct Arc {
  Edge edge;
  int start = 0;
  int len = 0;
  int least = 0;
};

VertexSet arc_set(int n, int start, int len) {
  VertexSet s(n);
  for (int i = 0; i < len; ++i) s.insert((start + i) % n);
  return s;
}

// Components of m - {u, v} for every edge, as arcs of the outer cycle, in
// tie-break order.
std::vector<Arc> all_arcs(const Mop& m) {
  const int n = m.order();
  std::vector<Edge> edges(m.chords());
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  std::sort(edges.begin(), edges.end());
  std::vector<Arc> out;
  auto push = [&](const Edge& e, int start, int len) {
    start %= n;
    if (len <= 0) return;
    out.push_back({e, start, len, start + len - 1 >= n ? 0 : start});
  };
  for (const auto& e : edges) {
    if (m.is_outer_edge(e.u, e.v)) {
      if (e.u == 0 && e.v == n - 1)
        push(e, 1, n - 2);
      else
        push(e, e.v + 1, n - 2);
      continue;
    }
    Arc inner{e, e.u + 1, e.v - e.u - 1, e.u + 1};
    const int outer_start = (e.v + 1) % n;
    const int outer_len = n - (e.v - e.u + 1);
    Arc outer{e, outer_start, outer_len, outer_start + outer_len - 1 >= n ? 0 : outer_start};
    if (outer.least < inner.least) std::swap(inner, outer);
    out.push_back(inner);
    out.push_back(outer);
  }
  return out;
}

std::optional<SplitChoice> pick(const Mop& m, auto&& qualifies) {
  std::optional<Arc> best;
  for (const auto& arc : all_arcs(m))
    if (qualifies(arc.len) && (!best || arc.len < best->len)) best = arc;
  if (!best) return std::nullopt;
  return SplitChoice{best->edge, arc_set(m.order(), best->start, best->len)};
}

std::vector<int> to_host(const VertexSet& positions, const std::vector<int>& host_at) {
  std::vector<int> out;
  for (int p : positions.members()) out.push_back(host_at[static_cast<std::size_t>(p)]);
  std::sort(out.begin(), out.end());
  return out;
}

PathDecomposition piece(const Graph& g, const std::vector<int>& vertices, int k) {
  auto pd = decomposition_at_most(g, VertexSet::from_members(g.order(), vertices), k);
  if (!pd)
    fail(ErrorKind::Precondition, "a piece of " + std::to_string(vertices.size()) + " vertices has pathwidth above " +
                                      std::to_string(k) + "; the supplied M is too large");
  return *pd;
}

PathDecomposition anchored_piece(const Graph& g, const std::vector<int>& vertices, int c, int k) {
  InducedSubgraph sub = induced_subgraph(g, vertices);
  const auto it = std::find(sub.to_original.begin(), sub.to_original.end(), c);
  auto pd = bag_search_pathwidth(sub.graph, k, static_cast<int>(it - sub.to_original.begin()));
  if (!pd) fail(ErrorKind::Internal, "no anchored decomposition of width " + std::to_string(k) + " for a piece at c");
  for (auto& bag : pd->bags) {
    for (int& v : bag) v = sub.to_original[static_cast<std::size_t>(v)];
    std::sort(bag.begin(), bag.end());
  }
  return *pd;
}

void append(PathDecomposition& into, const PathDecomposition& more) {
  for (const auto& bag : more.bags)
    if (!bag.empty()) into.bags.push_back(bag);
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ExtractionCertificate extract(const Graph& g, ExtractionCertificate::Method method, int k, int M) {
  if (!is_outerplanar(g)) fail(ErrorKind::NotOuterplanar, "graph is not outerplanar");
  const bool pw2 = method == ExtractionCertificate::Method::Pw2;
  ExtractionCertificate cert;
  cert.method = method;
  cert.n = g.order();
  cert.k = k;
  cert.M = M;
  cert.claimed_bound = extraction_bound(method, M, cert.n);

  std::vector<int> alive(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) alive[static_cast<std::size_t>(v)] = v;
  const int base_limit = pw2 ? 7 : M + 3;

  while (true) {
    TraceStep step;
    const int n = static_cast<int>(alive.size());
    step.n = n;
    if (n <= base_limit) {
      step.rule = TraceStep::Rule::Base;
      step.taken.assign(alive.begin(), alive.begin() + std::min(M, n));
      append(cert.decomposition, piece(g, step.taken, k));
      cert.trace.push_back(std::move(step));
      break;
    }
    InducedSubgraph sub = induced_subgraph(g, alive);
    MopCompletion done = complete_to_mop(sub.graph);
    std::vector<int> host_at(static_cast<std::size_t>(n));
    for (int local = 0; local < n; ++local)
      host_at[static_cast<std::size_t>(done.position[static_cast<std::size_t>(local)])] =
          sub.to_original[static_cast<std::size_t>(local)];
    const Mop& mop = done.mop;

    std::optional<SplitChoice> choice;
    if (!pw2) {
      choice = find_component_of_size(mop, M);
      if (choice) step.rule = TraceStep::Rule::Exact;
    }
    if (!choice) {
      choice = find_split_edge(mop, pw2 ? 5 : M, !pw2);
      step.rule = (pw2 && choice && choice->component.size() == 5) ? TraceStep::Rule::TakeAll : TraceStep::Rule::Split;
    }
    if (!choice) {
      // Unreachable on a Mop with n > M + 3, kept so the procedure is total.
      step.rule = TraceStep::Rule::Fallback;
      step.a = host_at[0];
      step.b = host_at[1];
      step.taken = set_minus(alive, set_union({step.a}, {step.b}));
      InducedSubgraph rest = induced_subgraph(g, step.taken);
      for (const auto& comp : connected_components(rest.graph)) {
        std::vector<int> hosts;
        for (int v : comp.members()) hosts.push_back(rest.to_original[static_cast<std::size_t>(v)]);
        append(cert.decomposition, piece(g, hosts, k));
      }
      cert.trace.push_back(std::move(step));
      break;
    }
    step.a = host_at[static_cast<std::size_t>(choice->edge.u)];
    step.b = host_at[static_cast<std::size_t>(choice->edge.v)];
    step.h = to_host(choice->component, host_at);
    if (step.rule == TraceStep::Rule::Exact || step.rule == TraceStep::Rule::TakeAll) {
      step.taken = step.h;
      append(cert.decomposition, piece(g, step.taken, k));
    } else {
      FaceSplit face = split_face(mop, choice->edge, choice->component);
      step.c = host_at[static_cast<std::size_t>(face.c)];
      step.h1 = to_host(face.h1, host_at);
      step.h2 = to_host(face.h2, host_at);
      const int bound = pw2 ? 5 : M;
      if (static_cast<int>(step.h1.size()) >= bound || static_cast<int>(step.h2.size()) >= bound)
        fail(ErrorKind::Internal, "face split left a side with at least " + std::to_string(bound) + " vertices");
      if (pw2) {
        step.rule = TraceStep::Rule::TakeAll;
        step.taken = step.h;
        PathDecomposition left = anchored_piece(g, set_union(step.h1, {step.c}), step.c, 2);
        PathDecomposition right = anchored_piece(g, set_union(step.h2, {step.c}), step.c, 2);
        append(cert.decomposition, glue_anchored(left, right, step.c));
      } else {
        step.taken = set_union(step.h1, step.h2);
        if (!step.h1.empty()) append(cert.decomposition, piece(g, step.h1, k));
        if (!step.h2.empty()) append(cert.decomposition, piece(g, step.h2, k));
      }
    }
    alive = set_minus(alive, set_union(step.h, set_union({step.a}, {step.b})));
    cert.trace.push_back(std::move(step));
  }

  for (const auto& step : cert.trace) cert.selected.insert(cert.selected.end(), step.taken.begin(), step.taken.end());
  std::sort(cert.selected.begin(), cert.selected.end());
  if (cert.decomposition.bags.empty()) cert.decomposition.bags.emplace_back();
  return cert;
}

}  // namespace

std::optional<SplitChoice> find_split_edge(const Mop& m, int threshold, bool strict) {
  return pick(m, [&](int len) { return strict ? len > threshold : len >= threshold; });
}

std::optional<SplitChoice> find_component_of_size(const Mop& m, int size) {
  return pick(m, [&](int len) { return len == size; });
}

FaceSplit split_face(const Mop& m, const Edge& ab, const VertexSet& h) {
  const int n = m.order();
  if (h.universe() != n) fail(ErrorKind::Precondition, "component is over a different vertex range");
  if (!m.is_outer_edge(ab.u, ab.v) && !m.is_chord(ab.u, ab.v))
    fail(ErrorKind::Precondition, "{" + std::to_string(ab.u) + "," + std::to_string(ab.v) + "} is not an edge");
  bool is_component = false;
  std::vector<int> walk;
  for (const auto& arc : all_arcs(m)) {
    if (arc.edge != ab) continue;
    if (arc_set(n, arc.start, arc.len) == h) {
      is_component = true;
      for (int i = 0; i < arc.len; ++i) walk.push_back((arc.start + i) % n);
    }
  }
  if (!is_component) fail(ErrorKind::Precondition, "H is not a component of the graph minus {a,b}");
  // The walk runs from the endpoint just before walk.front() to the other one.
  const int from = (walk.front() + n - 1) % n;
  Graph g = m.graph();
  auto it = std::find_if(walk.begin(), walk.end(), [&](int w) { return g.has_edge(w, ab.u) && g.has_edge(w, ab.v); });
  if (it == walk.end()) fail(ErrorKind::Internal, "no triangle on ab inside H");
  FaceSplit out;
  out.c = *it;
  VertexSet before = VertexSet::from_members(n, std::vector<int>(walk.begin(), it));
  VertexSet after = VertexSet::from_members(n, std::vector<int>(it + 1, walk.end()));
  if (from == ab.u) {
    out.h1 = before;
    out.h2 = after;
  } else {
    out.h1 = after;
    out.h2 = before;
  }
  for (int x : out.h1.members())
    for (int y : g.neighbors(x))
      if (out.h2.contains(y)) fail(ErrorKind::Internal, "the two sides of the face are adjacent");
  return out;
}

PathDecomposition glue_anchored(const PathDecomposition& left, const PathDecomposition& right, int c) {
  auto check_end = [&](const PathDecomposition& pd, const char* name) {
    if (pd.bags.empty()) fail(ErrorKind::Precondition, std::string(name) + " decomposition has no bags");
    const auto& last = pd.bags.back();
    if (std::find(last.begin(), last.end(), c) == last.end())
      fail(ErrorKind::Precondition, std::string(name) + " bag " + std::to_string(pd.bags.size() - 1) +
                                        " (last) does not contain " + std::to_string(c));
  };
  check_end(left, "left");
  check_end(right, "right");
  std::vector<int> left_vertices;
  for (const auto& bag : left.bags) left_vertices.insert(left_vertices.end(), bag.begin(), bag.end());
  std::sort(left_vertices.begin(), left_vertices.end());
  for (std::size_t i = 0; i < right.bags.size(); ++i)
    for (int v : right.bags[i])
      if (v != c && std::binary_search(left_vertices.begin(), left_vertices.end(), v))
        fail(ErrorKind::Precondition, "right bag " + std::to_string(i) + " shares vertex " + std::to_string(v) +
                                          " with the left decomposition");
  PathDecomposition out = left;
  out.bags.insert(out.bags.end(), right.bags.rbegin(), right.bags.rend());
  return out;
}

ExtractionCertificate extract_general(const Graph& g, int k, int M) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "k must be at least 1");
  if (M < 1) fail(ErrorKind::InvalidArgument, "M must be at least 1");
  std::optional<std::string> assumption;
  if (M <= kMCheckMaxOrder) {
    if (!M_holds(k, M))
      fail(ErrorKind::Precondition, "M = " + std::to_string(M) + " refuted: some outerplanar graph on at most " +
                                        std::to_string(M) + " vertices has pathwidth above " + std::to_string(k));
  } else {
    assumption = "every outerplanar graph on at most " + std::to_string(M) + " vertices has pathwidth at most " +
                 std::to_string(k) + " (not checked beyond " + std::to_string(kMCheckMaxOrder) + " vertices)";
  }
  ExtractionCertificate cert = extract(g, ExtractionCertificate::Method::General, k, M);
  cert.assumption = assumption;
  return cert;
}

ExtractionCertificate extract_pw2(const Graph& g) {
  if (g.order() < 3) fail(ErrorKind::InvalidArgument, "extract_pw2 needs at least 3 vertices");
  return extract(g, ExtractionCertificate::Method::Pw2, 2, 5);
}

namespace {

bool separated(const Graph& g, const std::vector<int>& part, const std::vector<int>& others) {
  for (int x : part)
    for (int y : g.neighbors(x))
      if (std::binary_search(others.begin(), others.end(), y)) return false;
  return true;
}

std::string ids(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

CertificateCheck verify_certificate(const Graph& g, const ExtractionCertificate& cert) {
  CertificateCheck out;
  auto problem = [&](std::string what) {
    out.ok = false;
    out.problems.push_back(std::move(what));
  };
  const bool pw2 = cert.method == ExtractionCertificate::Method::Pw2;
  if (cert.n != g.order()) problem("certificate is for n = " + std::to_string(cert.n) + ", graph has " +
                                   std::to_string(g.order()));
  if (pw2 && (cert.k != 2 || cert.M != 5)) problem("pathwidth-2 certificate must use k = 2 and M = 5");
  if (cert.M < 1) problem("M must be positive");
  if (cert.M >= 1 && cert.claimed_bound != extraction_bound(cert.method, cert.M, g.order()))
    problem("claimed bound " + cert.claimed_bound.to_string() + " differs from the formula value " +
            extraction_bound(cert.method, cert.M, g.order()).to_string());

  std::vector<int> selected = cert.selected;
  std::sort(selected.begin(), selected.end());
  if (std::adjacent_find(selected.begin(), selected.end()) != selected.end()) problem("selection repeats a vertex");
  for (int v : selected)
    if (v < 0 || v >= g.order()) {
      problem("selected vertex " + std::to_string(v) + " is out of range");
      return out;
    }
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  if (Rational(static_cast<std::int64_t>(selected.size())) < cert.claimed_bound)
    problem("selected " + std::to_string(selected.size()) + " vertices, below the bound " +
            cert.claimed_bound.to_string());

  // Decomposition of G[selected].
  InducedSubgraph sub = induced_subgraph(g, selected);
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_original.size(); ++i)
    local[static_cast<std::size_t>(sub.to_original[i])] = static_cast<int>(i);
  PathDecomposition mapped;
  bool foreign = false;
  for (std::size_t i = 0; i < cert.decomposition.bags.size() && !foreign; ++i) {
    std::vector<int> bag;
    for (int v : cert.decomposition.bags[i]) {
      if (v < 0 || v >= g.order() || local[static_cast<std::size_t>(v)] < 0) {
        problem("bag " + std::to_string(i) + " contains vertex " + std::to_string(v) + " outside the selection");
        foreign = true;
        break;
      }
      bag.push_back(local[static_cast<std::size_t>(v)]);
    }
    mapped.bags.push_back(std::move(bag));
  }
  if (!foreign) {
    Validation v = validate_path_decomposition(sub.graph, mapped);
    if (!v.ok())
      problem("decomposition invalid: " + v.violation->message + " (ids local to the selection)");
    else if (v.width > cert.k)
      problem("decomposition width " + std::to_string(v.width) + " exceeds k = " + std::to_string(cert.k));
  }

  // Trace replay.
  std::vector<int> alive(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) alive[static_cast<std::size_t>(v)] = v;
  std::vector<int> taken_all;
  const int bound = pw2 ? 5 : cert.M;
  for (std::size_t i = 0; i < cert.trace.size(); ++i) {
    const TraceStep& s = cert.trace[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    const bool last = i + 1 == cert.trace.size();
    const int n = static_cast<int>(alive.size());
    if (s.n != n) problem(at + "subproblem order " + std::to_string(s.n) + ", replay gives " + std::to_string(n));
    taken_all.insert(taken_all.end(), s.taken.begin(), s.taken.end());
    if (!std::is_sorted(s.taken.begin(), s.taken.end()) || !std::includes(alive.begin(), alive.end(), s.taken.begin(), s.taken.end()))
      problem(at + "taken vertices are not part of the subproblem");
    if (s.rule == TraceStep::Rule::Base) {
      if (!last) problem(at + "base case before the end of the trace");
      if (n > (pw2 ? 7 : cert.M + 3)) problem(at + "base case on a subproblem of order " + std::to_string(n));
      if (static_cast<int>(s.taken.size()) != std::min(bound, n)) problem(at + "base case takes the wrong count");
      continue;
    }
    const std::vector<int> ab = set_union({s.a}, {s.b});
    // ab is an edge of the completed subproblem, not necessarily of g.
    if (s.a == s.b || !std::includes(alive.begin(), alive.end(), ab.begin(), ab.end()))
      problem(at + "a, b are not distinct vertices of the subproblem");
    const std::vector<int> rest = set_minus(alive, ab);
    if (s.rule == TraceStep::Rule::Fallback) {
      if (!last) problem(at + "fallback before the end of the trace");
      if (s.taken != rest) problem(at + "fallback must keep every vertex except a and b");
      InducedSubgraph r = induced_subgraph(g, s.taken);
      for (const auto& comp : connected_components(r.graph))
        if (comp.size() > bound) problem(at + "fallback component larger than M");
      continue;
    }
    if (!std::is_sorted(s.h.begin(), s.h.end()) || !std::includes(rest.begin(), rest.end(), s.h.begin(), s.h.end())) {
      problem(at + "H is not inside the subproblem minus {a,b}");
      return out;
    }
    const std::vector<int> outside = set_minus(rest, s.h);
    if (!separated(g, s.h, outside)) problem(at + "H " + ids(s.h) + " has an edge to the rest of the subproblem");
    const int h = static_cast<int>(s.h.size());
    switch (s.rule) {
      case TraceStep::Rule::Exact:
        if (pw2 || h != cert.M) problem(at + "exact rule needs |H| = M");
        if (s.taken != s.h) problem(at + "exact rule takes H");
        break;
      case TraceStep::Rule::TakeAll:
      case TraceStep::Rule::Split: {
        const bool whole = s.rule == TraceStep::Rule::TakeAll;
        if (whole && !pw2) problem(at + "taking H whole is specific to the pathwidth-2 method");
        if (whole && h == 5 && s.c < 0) {
          if (s.taken != s.h) problem(at + "taken set does not match the rule");
          break;
        }
        if (pw2 ? h < 5 : h <= cert.M) problem(at + "|H| = " + std::to_string(h) + " is below the split threshold");
        if (!std::binary_search(s.h.begin(), s.h.end(), s.c)) problem(at + "c is not in H");
        std::vector<int> parts = set_union(s.h1, s.h2);
        if (s.h1.size() + s.h2.size() + 1 != s.h.size() || set_union(parts, {s.c}) != s.h)
          problem(at + "H1, H2 and c do not partition H");
        if (static_cast<int>(s.h1.size()) >= bound || static_cast<int>(s.h2.size()) >= bound)
          problem(at + "a side of the face has at least " + std::to_string(bound) + " vertices");
        if (!separated(g, s.h1, s.h2)) problem(at + "H1 and H2 are adjacent");
        if (s.taken != (whole ? s.h : parts)) problem(at + "taken set does not match the rule");
        break;
      }
      default: break;
    }
    alive = set_minus(rest, s.h);
    if (last) problem(at + "trace ends without a base case");
  }
  std::sort(taken_all.begin(), taken_all.end());
  if (taken_all != selected) problem("trace selections do not add up to the selected set");
  return out;
}

}  // namespace opw

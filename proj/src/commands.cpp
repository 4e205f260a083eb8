#include <algorithm>
#include <iomanip>
#include <mutex>
#include <sstream>

#include "opwlab/commands.hpp"
#include "opwlab/error.hpp"
#include "opwlab/extraction.hpp"
#include "opwlab/extremal.hpp"
#include "opwlab/parallel.hpp"

namespace opw {

bool RunReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

Json RunReport::to_json() const {
  Json list = Json::array();
  for (const auto& a : assertions) {
    Json item{{"claim", a.claim}, {"anchor", a.anchor}, {"status", a.passed ? "pass" : "fail"}};
    if (!a.detail.empty()) item["detail"] = a.detail;
    list.push_back(std::move(item));
  }
  return Json{{"command", command}, {"inputs", inputs},   {"results", results},
              {"assertions", list}, {"passed", passed()}, {"wall_time", wall_time}};
}

std::string format_graph(const Graph& g, TextFormat format) {
  switch (format) {
    case TextFormat::Edges: return to_edge_list(g);
    case TextFormat::Graph6: return encode_graph6(g) + "\n";
    case TextFormat::Mop: return to_mop_text(mop_from_maximal(g).mop);
  }
  return {};
}

namespace {

void check(RunReport& r, std::string claim, std::string anchor, bool passed, std::string detail = {}) {
  r.assertions.push_back({std::move(claim), std::move(anchor), passed, std::move(detail)});
}

Json graph_inputs(const Graph& g) {
  Json j{{"n", g.order()}, {"m", g.size()}};
  if (g.order() <= 64) j["graph6"] = encode_graph6(g);
  return j;
}

std::string fraction(const Rational& r) {
  std::ostringstream out;
  out << r.to_string() << " (" << std::fixed << std::setprecision(4) << r.to_double() << ")";
  return out.str();
}

std::string bag_text(const PathDecomposition& pd) {
  std::string s;
  for (const auto& bag : pd.bags) {
    s += "{";
    for (std::size_t i = 0; i < bag.size(); ++i) s += (i ? "," : "") + std::to_string(bag[i]);
    s += "} ";
  }
  if (!s.empty()) s.pop_back();
  return s;
}

std::vector<Graph> mop_corpus(int nmax) {
  std::vector<Graph> out;
  for (int n = 3; n <= nmax; ++n)
    for_each_mop(n, true, [&](const Mop& m) { out.push_back(m.graph()); });
  return out;
}

}  // namespace

RunReport cmd_pw(const Graph& g, const PwOptions& opt) {
  RunReport r;
  r.command = "pw";
  r.inputs = graph_inputs(g);
  const char* engine_name = opt.engine == Engine::Vs ? "vs" : opt.engine == Engine::Bags ? "bags" : "both";
  r.inputs["engine"] = engine_name;
  if (opt.anchor) r.inputs["anchor"] = *opt.anchor;
  const int n = g.order();
  if (opt.engine != Engine::Bags && n > kVsMaxOrder)
    fail(ErrorKind::Scope, "the vs engine handles n <= " + std::to_string(kVsMaxOrder) + ", got " + std::to_string(n));
  if ((opt.engine != Engine::Vs || opt.anchor) && n > kBagSearchMaxOrder)
    fail(ErrorKind::Scope, "the bag-state engine handles n <= " + std::to_string(kBagSearchMaxOrder) + ", got " +
                               std::to_string(n));
  if (opt.anchor && (*opt.anchor < 0 || *opt.anchor >= n))
    fail(ErrorKind::InvalidArgument, "anchor " + std::to_string(*opt.anchor) + " is not a vertex");

  int width = 0;
  PathDecomposition pd;
  if (opt.engine != Engine::Bags) {
    PathwidthResult res = vs_pathwidth(g, opt.threads);
    width = res.width;
    pd = layout_to_decomposition(g, res.layout);
    r.results["layout"] = res.layout.order;
  }
  if (opt.engine != Engine::Vs) {
    int bw = bag_search_min_width(g);
    if (opt.engine == Engine::Both) {
      r.results["width_bags"] = bw;
      check(r, "subset DP and bag-state search agree", "pw(G) is engine independent", bw == width,
            "vs " + std::to_string(width) + ", bags " + std::to_string(bw));
    } else {
      width = bw;
      pd = *bag_search_pathwidth(g, bw);
    }
  }
  Validation v = validate_path_decomposition(g, pd);
  check(r, "decomposition validates at the reported width", "width = max bag size - 1",
        v.ok() && v.width == width, v.ok() ? "" : v.violation->message);
  r.results["width"] = width;
  r.results["bags"] = to_json(pd);
  r.text = "pathwidth " + std::to_string(width) + "\nbags " + bag_text(pd) + "\n";
  r.artifacts["dot"] = to_dot(pd);
  if (opt.anchor) {
    const int a = anchored_pathwidth(g, *opt.anchor);
    PathDecomposition apd = *bag_search_pathwidth(g, a, *opt.anchor);
    Validation av = validate_path_decomposition(g, apd);
    const auto& last = apd.bags.back();
    check(r, "anchored decomposition validates with the anchor in its last bag", "anchor lies in an end bag",
          av.ok() && av.width == a && std::find(last.begin(), last.end(), *opt.anchor) != last.end());
    check(r, "anchored width is at least the pathwidth", "anchored >= pw(G)", a >= width);
    r.results["anchored"] = a;
    r.results["anchored_bags"] = to_json(apd);
    r.text += "anchored at " + std::to_string(*opt.anchor) + ": " + std::to_string(a) + "\nbags " + bag_text(apd) + "\n";
    r.artifacts["dot_anchored"] = to_dot(apd);
  }
  return r;
}

RunReport cmd_extract(const Graph& g, int k, std::optional<int> M) {
  RunReport r;
  r.command = "extract";
  r.inputs = graph_inputs(g);
  r.inputs["k"] = k;
  if (M) r.inputs["M"] = *M;
  ExtractionCertificate cert;
  std::string anchor;
  if (k == 2 && !M) {
    cert = extract_pw2(g);
    anchor = "I_2(G) >= 5n/7";
  } else {
    if (!M) {
      if (k != 1) fail(ErrorKind::InvalidArgument, "--M is required for k >= 3");
      M = 2;
    }
    cert = extract_general(g, k, *M);
    anchor = "I_k(G) >= M_k n/(M_k+3)";
  }
  CertificateCheck c = verify_certificate(g, cert);
  std::string problems;
  for (const auto& p : c.problems) problems += (problems.empty() ? "" : "; ") + p;
  check(r, "certificate verifies", anchor, c.ok, problems);
  Json cj = to_json(cert);
  r.results["certificate"] = cj;
  r.results["selected_count"] = cert.selected.size();
  r.artifacts["certificate"] = cj.dump(2) + "\n";
  r.artifacts["dot"] = to_dot(cert.decomposition);
  r.text = "selected " + std::to_string(cert.selected.size()) + " of " + std::to_string(g.order()) +
           " vertices, bound " + fraction(cert.claimed_bound) + ", width <= " + std::to_string(cert.k) + "\n";
  if (cert.assumption) r.text += "assumption: " + *cert.assumption + "\n";
  return r;
}

RunReport cmd_ik(const Graph& g, int k) {
  RunReport r;
  r.command = "ik";
  r.inputs = graph_inputs(g);
  r.inputs["k"] = k;
  IkResult res = brute_force_Ik(g, k);
  InducedSubgraph sub = induced_subgraph(g, res.witness_set);
  PathDecomposition local = res.decomposition;
  std::vector<int> to_local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_original.size(); ++i)
    to_local[static_cast<std::size_t>(sub.to_original[i])] = static_cast<int>(i);
  for (auto& bag : local.bags)
    for (int& v : bag) v = to_local[static_cast<std::size_t>(v)];
  Validation v = validate_path_decomposition(sub.graph, local);
  check(r, "witness decomposition validates at width <= k", "pw(G[S]) <= k", v.ok() && v.width <= k);
  r.results["size"] = res.size;
  r.results["set"] = res.witness_set.members();
  r.results["bags"] = to_json(res.decomposition);
  r.text = "I_" + std::to_string(k) + " = " + std::to_string(res.size) + "\n";
  return r;
}

RunReport cmd_mk(int k, int cap, int threads) {
  RunReport r;
  r.command = "mk";
  r.inputs = {{"k", k}, {"cap", cap}};
  MkResult res = compute_Mk(k, cap, threads);
  const bool exact = res.status == MkResult::Status::Exact;
  r.results["status"] = exact ? "exact" : "lower-bound";
  r.results["value"] = res.value;
  Json scanned = Json::array();
  for (auto [n, count] : res.scanned) scanned.push_back({{"n", n}, {"classes", count}});
  r.results["scanned"] = scanned;
  r.results["basis"] = "adding edges and taking disjoint unions never lowers pathwidth, so Mop classes decide M_k";
  if (res.witness) r.results["witness_graph6"] = encode_graph6(*res.witness);
  if (res.witness_mop) r.results["witness_mop"] = to_json(*res.witness_mop);
  if (auto known = known_M(k); known && cap >= *known + 1)
    check(r, "M_" + std::to_string(k) + " = " + std::to_string(*known), "M_" + std::to_string(k) + " = " + std::to_string(*known),
          exact && res.value == *known, "computed " + std::to_string(res.value));
  if (exact)
    r.text = "M_" + std::to_string(k) + " = " + std::to_string(res.value) + " (witness on " +
             std::to_string(res.value + 1) + " vertices: " + encode_graph6(*res.witness) + ")\n";
  else
    r.text = "M_" + std::to_string(k) + " >= " + std::to_string(res.value) + " (every Mop on at most " +
             std::to_string(cap) + " vertices has pathwidth <= " + std::to_string(k) + ")\n";
  return r;
}

RunReport cmd_enum(int n, bool iso, TextFormat format) {
  RunReport r;
  r.command = "enum";
  r.inputs = {{"n", n}, {"iso", iso}};
  std::size_t count = 0;
  std::string listing;
  for_each_mop(n, iso, [&](const Mop& m) {
    ++count;
    if (format == TextFormat::Mop)
      listing += to_mop_text(m);
    else if (format == TextFormat::Graph6)
      listing += encode_graph6(m.graph()) + "\n";
    else
      listing += to_edge_list(m.graph()) + "\n";
  });
  r.results["count"] = count;
  if (!iso) {
    const auto expected = catalan(n - 2);
    check(r, "labelled count equals Catalan(n-2)", "triangulations of a convex n-gon", count == expected,
          std::to_string(count) + " vs " + std::to_string(expected));
  }
  r.text = listing;
  r.artifacts["summary"] = std::to_string(count) + (iso ? " classes\n" : " triangulations\n");
  return r;
}

RunReport cmd_witness(int k, std::optional<Graph> core, bool verify) {
  RunReport r;
  r.command = "witness";
  r.inputs = {{"k", k}, {"verify", verify}};
  if (core) r.inputs["core"] = graph_inputs(*core);
  auto M = known_M(k);
  if (!M) {
    r.results["status"] = "skipped";
    r.results["reason"] = "M_" + std::to_string(k) + " unknown";
    r.text = "skipped: M_" + std::to_string(k) + " unknown\n";
    return r;
  }
  Graph base = core ? *core : (k == 1 ? Mop::triangle().graph() : triforce().graph());
  Graph h = witness_graph(k, base);
  r.results["status"] = "built";
  r.results["order"] = h.order();
  r.results["graph6"] = encode_graph6(h);
  check(r, "|V(H)| = 3M_k + 4", "|V(H)| = 3M_k+4", h.order() == 3 * *M + 4);
  r.text = encode_graph6(h) + "\n";
  if (verify) {
    WitnessReport w = verify_witness(k, base);
    r.results["ik"] = w.ik;
    r.results["ratio"] = to_json(w.ratio);
    r.results["ik_set"] = w.best.witness_set.members();
    check(r, "I_k(H) = 3M_k", "|V(F)| <= 3M_k", w.ik == 3 * w.M,
          "I_" + std::to_string(k) + " = " + std::to_string(w.ik));
    check(r, "I_k(H)/|V(H)| = M_k/(M_k + 4/3)", "I_k(G) <= M_k n/(M_k+4/3)", w.ratio == w.formula,
          w.ratio.to_string() + " vs " + w.formula.to_string());
    r.text += "I_" + std::to_string(k) + " = " + std::to_string(w.ik) + " of " + std::to_string(w.order) +
              ", ratio " + fraction(w.ratio) + "\n";
  }
  return r;
}

RunReport cmd_verify_paper_table(int kmax, int threads) {
  if (kmax < 1) fail(ErrorKind::InvalidArgument, "kmax must be at least 1");
  if (kmax > 3) fail(ErrorKind::Scope, "the table has rows k = 1..3 only");
  RunReport r;
  r.command = "verify-paper-table";
  r.inputs = {{"kmax", kmax}};
  constexpr int kCorpusMax = 11;
  const std::vector<Graph> corpus = mop_corpus(kCorpusMax);
  Json rows = Json::array();
  std::ostringstream table;
  table << "k | M_k | lower | upper\n";
  for (int k = 1; k <= std::min(kmax, 2); ++k) {
    const int M = *known_M(k);
    MkResult mk = compute_Mk(k, M + 3, threads);
    check(r, "M_" + std::to_string(k) + " = " + std::to_string(M), "M_" + std::to_string(k) + " = " + std::to_string(M),
          mk.status == MkResult::Status::Exact && mk.value == M, "computed " + std::to_string(mk.value));

    const Rational lower = k == 1 ? Rational(2, 5) : Rational(5, 7);
    std::mutex mu;
    std::vector<std::string> failures;
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
      const Graph& g = corpus[i];
      ExtractionCertificate cert = k == 1 ? extract_general(g, 1, 2) : extract_pw2(g);
      CertificateCheck c = verify_certificate(g, cert);
      const auto need = (lower * Rational(g.order())).ceil();
      if (!c.ok || static_cast<std::int64_t>(cert.selected.size()) < need) {
        std::lock_guard lock(mu);
        failures.push_back(encode_graph6(g));
      }
    });
    std::sort(failures.begin(), failures.end());
    check(r, "certificates reach " + lower.to_string() + " n on all " + std::to_string(corpus.size()) +
                 " Mop classes with n <= " + std::to_string(kCorpusMax),
          k == 1 ? "I_1(G) >= 2n/5" : "I_2(G) >= 5n/7", failures.empty(),
          failures.empty() ? "" : "first failure " + failures.front());

    WitnessReport w = verify_witness(k);
    const Rational upper = k == 1 ? Rational(3, 5) : Rational(15, 19);
    check(r, "witness graph attains ratio " + upper.to_string(), "I_k(G) <= M_k n/(M_k+4/3)",
          w.passed && w.ratio == upper, "I_" + std::to_string(k) + " = " + std::to_string(w.ik) + " on " +
                                             std::to_string(w.order) + " vertices");
    rows.push_back({{"k", k},
                    {"M", mk.value},
                    {"lower", to_json(lower)},
                    {"upper", to_json(w.ratio)},
                    {"witness_graph6", encode_graph6(w.graph)},
                    {"corpus_classes", corpus.size()}});
    table << k << " | " << mk.value << " | " << fraction(lower) << " | " << fraction(w.ratio) << "\n";
  }
  if (kmax >= 3) {
    Order24Certificate cert = order24_certificate(threads);
    check(r, "M_3 <= 23 via a 24-vertex Mop of pathwidth >= 4", "smallest 2-connected outerplanar graph of pathwidth >= 4 has order <= 24",
          cert.passed, "tree pw " + std::to_string(cert.tree_pw) + ", dual bound " + std::to_string(cert.dual_bound) +
                           ", DP " + std::to_string(cert.mop_pw));
    MkResult scan = compute_Mk(3, 12, threads);
    Json row{{"k", 3},
             {"M_upper", 23},
             {"lower", "<= 23/26"},
             {"upper", "<= 69/73"},
             {"certificate", {{"n", cert.n}, {"tree_pw", cert.tree_pw}, {"dual_bound", cert.dual_bound}, {"mop_pw", cert.mop_pw}, {"mop", to_json(cert.mop)}}},
             {"scan", {{"status", scan.status == MkResult::Status::Exact ? "exact" : "lower-bound"}, {"value", scan.value}}}};
    if (scan.witness) row["scan"]["witness_graph6"] = encode_graph6(*scan.witness);
    rows.push_back(row);
    table << "3 | <= 23 | <= 23/26 | <= 69/73\n";
    table << "  exhaustive scan to n = 12: M_3 " << (scan.status == MkResult::Status::Exact ? "= " : ">= ") << scan.value
          << "\n";
  }
  r.results["rows"] = rows;
  r.text = table.str();
  return r;
}

RemarkSearch search_remark(int nmax, int threads) {
  if (nmax < 3) fail(ErrorKind::InvalidArgument, "nmax must be at least 3");
  if (nmax > kRemarkMaxOrder) fail(ErrorKind::Scope, "search-remark is limited to nmax <= " + std::to_string(kRemarkMaxOrder));
  RemarkSearch out;
  for (int n = 3; n <= nmax; ++n) {
    std::vector<Mop> width3;
    for_each_mop(n, true, [&](const Mop& m) {
      Graph g = m.graph();
      if (pathwidth_at_most(g, 3) && !pathwidth_at_most(g, 2)) width3.push_back(m);
    });
    out.examined.emplace_back(n, width3.size());
    std::vector<std::vector<RemarkHit>> found(width3.size());
    parallel_for(width3.size(), threads, [&](std::size_t i) {
      Graph g = width3[i].graph();
      for (int v = 0; v < n; ++v)
        if (!bag_search_pathwidth(g, 3, v)) found[i].push_back({width3[i], v, anchored_pathwidth(g, v)});
    });
    for (auto& f : found) out.hits.insert(out.hits.end(), f.begin(), f.end());
  }
  return out;
}

RunReport cmd_search_remark(int nmax, int threads) {
  RunReport r;
  r.command = "search-remark";
  r.inputs = {{"nmax", nmax}};
  RemarkSearch s = search_remark(nmax, threads);
  Json examined = Json::array();
  for (auto [n, c] : s.examined) examined.push_back({{"n", n}, {"pathwidth3_classes", c}});
  Json hits = Json::array();
  bool all_valid = true;
  for (const auto& h : s.hits) {
    Graph g = h.mop.graph();
    const bool valid = h.anchored >= 4 && vs_pathwidth(g).width == 3;
    all_valid = all_valid && valid;
    hits.push_back({{"mop", to_json(h.mop)}, {"vertex", h.vertex}, {"anchored", h.anchored}, {"revalidated", valid}});
    r.text += "n=" + std::to_string(h.mop.order()) + " " + encode_graph6(g) + " vertex " + std::to_string(h.vertex) +
              " anchored " + std::to_string(h.anchored) + "\n";
  }
  r.results["examined"] = examined;
  r.results["hits"] = hits;
  check(r, "every hit has pathwidth 3 and anchored width >= 4", "a vertex excluded from every end bag of width 3",
        all_valid);
  if (s.hits.empty()) r.text = "none found up to " + std::to_string(nmax) + "\n";
  return r;
}

RunReport cmd_convert(const Graph& g, TextFormat to) {
  RunReport r;
  r.command = "convert";
  r.inputs = graph_inputs(g);
  r.text = format_graph(g, to);
  r.results["n"] = g.order();
  r.results["m"] = g.size();
  return r;
}

}  // namespace opw

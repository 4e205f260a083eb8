#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "opwlab/opwlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct Failure {
  std::string message;
};

struct GraphDeleter {
  void operator()(opw_graph* g) const { opw_graph_free(g); }
};
struct ReportDeleter {
  void operator()(opw_report* r) const { opw_report_free(r); }
};
using GraphPtr = std::unique_ptr<opw_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<opw_report, ReportDeleter>;

void ensure(opw_status s) {
  if (s != OPW_OK) throw Failure{std::string(opw_status_name(s)) + ": " + opw_last_error()};
}

opw_format parse_format(const std::string& name) {
  if (name == "edges") return OPW_FORMAT_EDGES;
  if (name == "g6") return OPW_FORMAT_GRAPH6;
  if (name == "mop") return OPW_FORMAT_MOP;
  return OPW_FORMAT_AUTO;
}

struct Globals {
  std::string input;
  std::string format = "auto";
  std::string json_path;
  std::string dot_path;
  unsigned long long seed = 0;
  int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
};

// --input takes a path, "-" for stdin, or random-mop:N (seeded by --seed).
GraphPtr load_graph(const Globals& g) {
  opw_graph* out = nullptr;
  const std::string random_prefix = "random-mop:";
  if (g.input.rfind(random_prefix, 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(g.input.substr(random_prefix.size()));
    } catch (const std::exception&) {
      throw Failure{"bad --input " + g.input};
    }
    ensure(opw_graph_random_mop(n, g.seed, &out));
    return GraphPtr(out);
  }
  std::string text;
  if (g.input.empty() || g.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(g.input, std::ios::binary);
    if (!in) throw Failure{"cannot read " + g.input};
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  ensure(opw_graph_parse(text.data(), text.size(), parse_format(g.format), &out));
  GraphPtr graph(out);
  for (size_t i = 0; i < opw_graph_warning_count(out); ++i) std::cerr << "warning: " << opw_graph_warning(out, i) << "\n";
  return graph;
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{"cannot write " + path};
  out << content;
}

int finish(const Globals& g, opw_report* raw) {
  ReportPtr report(raw);
  if (g.json_path != "-") std::cout << opw_report_text(raw);
  if (!g.json_path.empty()) write_file(g.json_path, opw_report_json(raw, 1));
  if (!g.dot_path.empty()) {
    const char* dot = opw_report_artifact(raw, "dot");
    if (!dot) throw Failure{"this command produces no decomposition to draw"};
    write_file(g.dot_path, dot);
  }
  if (!opw_report_passed(raw)) {
    std::cerr << "assertion failed; see the JSON report for details\n";
    return kExitAssertion;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pathwidth experiments on outerplanar graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--input", g.input, "graph file, - for stdin, or random-mop:N");
  app.add_option("--format", g.format, "input format (enum: output format)")
      ->check(CLI::IsMember({"auto", "edges", "g6", "mop"}));
  app.add_option("--json", g.json_path, "write the JSON report here (- for stdout)");
  app.add_option("--dot", g.dot_path, "write the decomposition as Graphviz DOT");
  app.add_option("--seed", g.seed, "seed for random inputs");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);

  std::string engine = "vs";
  int anchor = -1;
  auto* pw = app.add_subcommand("pw", "pathwidth with a validated decomposition");
  pw->add_option("--engine", engine)->check(CLI::IsMember({"vs", "bags", "both"}));
  pw->add_option("--anchor", anchor, "also report the width with this vertex in an end bag");

  int k = 2;
  int M = 0;
  auto* extract = app.add_subcommand("extract", "certified large induced subgraph of pathwidth <= k");
  extract->add_option("--k", k);
  extract->add_option("--M", M, "every outerplanar graph on <= M vertices has pathwidth <= k");

  auto* ik = app.add_subcommand("ik", "exact I_k by exhaustive search (n <= 20)");
  ik->add_option("--k", k)->required();

  int cap = 12;
  auto* mk = app.add_subcommand("mk", "compute M_k over Mop classes");
  mk->add_option("--k", k)->required();
  mk->add_option("--cap", cap, "largest order scanned (<= 16)");

  int n = 0;
  bool iso = false;
  auto* en = app.add_subcommand("enum", "list triangulations of the n-gon");
  en->add_option("--n", n)->required();
  en->add_flag("--iso", iso, "one per isomorphism class");

  bool verify = false;
  auto* witness = app.add_subcommand("witness", "the 3M_k+4 vertex upper-bound graph");
  witness->add_option("--k", k)->required();
  witness->add_flag("--verify", verify, "compute I_k of the witness");

  int kmax = 3;
  auto* table = app.add_subcommand("verify-paper-table", "recheck the small-k table of M_k and ratios");
  table->add_option("--kmax", kmax);

  int nmax = 8;
  auto* remark = app.add_subcommand("search-remark", "look for a vertex that no width-3 end bag can hold");
  remark->add_option("--nmax", nmax);

  std::string to;
  auto* convert = app.add_subcommand("convert", "re-encode a graph");
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"edges", "g6", "mop"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    opw_report* report = nullptr;
    if (pw->parsed()) {
      GraphPtr graph = load_graph(g);
      const opw_engine e = engine == "bags" ? OPW_ENGINE_BAGS : engine == "both" ? OPW_ENGINE_BOTH : OPW_ENGINE_VS;
      ensure(opw_cmd_pw(graph.get(), e, anchor, g.threads, &report));
    } else if (extract->parsed()) {
      GraphPtr graph = load_graph(g);
      ensure(opw_cmd_extract(graph.get(), k, M, &report));
    } else if (ik->parsed()) {
      GraphPtr graph = load_graph(g);
      ensure(opw_cmd_ik(graph.get(), k, &report));
    } else if (mk->parsed()) {
      ensure(opw_cmd_mk(k, cap, g.threads, &report));
    } else if (en->parsed()) {
      ensure(opw_cmd_enum(n, iso ? 1 : 0, parse_format(g.format), &report));
    } else if (witness->parsed()) {
      GraphPtr core = g.input.empty() ? nullptr : load_graph(g);
      ensure(opw_cmd_witness(k, core.get(), verify ? 1 : 0, &report));
    } else if (table->parsed()) {
      ensure(opw_cmd_verify_paper_table(kmax, g.threads, &report));
    } else if (remark->parsed()) {
      ensure(opw_cmd_search_remark(nmax, g.threads, &report));
    } else if (convert->parsed()) {
      GraphPtr graph = load_graph(g);
      ensure(opw_cmd_convert(graph.get(), parse_format(to), &report));
    }
    return finish(g, report);
  } catch (const Failure& f) {
    std::cerr << "opwlab: " << f.message << "\n";
    return kExitUsage;
  }
}

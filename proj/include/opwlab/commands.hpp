#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opwlab/graph.hpp"
#include "opwlab/serialize.hpp"

namespace opw {

struct Assertion {
  std::string claim;
  std::string anchor;  // the statement the check stands for
  bool passed = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Assertion> assertions;
  double wall_time = 0.0;  // set by whoever timed the call
  std::string text;                              // human-readable summary
  std::map<std::string, std::string> artifacts;  // e.g. "dot", "certificate"

  bool passed() const;
  Json to_json() const;
};

enum class Engine { Vs, Bags, Both };
enum class TextFormat { Edges, Graph6, Mop };

struct PwOptions {
  Engine engine = Engine::Vs;
  std::optional<int> anchor;
  int threads = 1;
};

RunReport cmd_pw(const Graph& g, const PwOptions& opt);
// M omitted: k = 1 uses 2, k = 2 runs the pathwidth-2 method, k >= 3 is an error.
RunReport cmd_extract(const Graph& g, int k, std::optional<int> M);
RunReport cmd_ik(const Graph& g, int k);
RunReport cmd_mk(int k, int cap, int threads);
RunReport cmd_enum(int n, bool iso, TextFormat format);
RunReport cmd_witness(int k, std::optional<Graph> core, bool verify);
RunReport cmd_verify_paper_table(int kmax, int threads);
RunReport cmd_search_remark(int nmax, int threads);
RunReport cmd_convert(const Graph& g, TextFormat to);

constexpr int kRemarkMaxOrder = 12;

struct RemarkHit {
  Mop mop;
  int vertex = -1;
  int anchored = 0;
};

struct RemarkSearch {
  std::vector<std::pair<int, std::size_t>> examined;  // (order, classes of pathwidth 3)
  std::vector<RemarkHit> hits;
};

// Mops of pathwidth exactly 3 having a vertex that lies in no end bag of any
// width-3 decomposition.
RemarkSearch search_remark(int nmax, int threads);

std::string format_graph(const Graph& g, TextFormat format);

}  // namespace opw

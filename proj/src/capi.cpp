#include <chrono>
#include <cstring>
#include <new>
#include <string>

#include "opwlab/commands.hpp"
#include "opwlab/error.hpp"
#include "opwlab/opwlab.h"
#include "opwlab/width.hpp"

struct opw_graph {
  opw::Graph graph;
  std::vector<std::string> warnings;
};

struct opw_report {
  opw::RunReport report;
  std::string json;
};

namespace {

std::string& last_error() {
  thread_local std::string message;
  return message;
}

opw_status status_of(opw::ErrorKind kind) {
  switch (kind) {
    case opw::ErrorKind::InvalidArgument: return OPW_ERR_INVALID_ARGUMENT;
    case opw::ErrorKind::Parse: return OPW_ERR_PARSE;
    case opw::ErrorKind::Scope: return OPW_ERR_SCOPE;
    case opw::ErrorKind::NotOuterplanar: return OPW_ERR_NOT_OUTERPLANAR;
    case opw::ErrorKind::Precondition: return OPW_ERR_PRECONDITION;
    case opw::ErrorKind::Internal: return OPW_ERR_INTERNAL;
  }
  return OPW_ERR_INTERNAL;
}

template <class Fn>
opw_status guard(Fn&& fn) {
  try {
    fn();
    last_error().clear();
    return OPW_OK;
  } catch (const opw::Error& e) {
    last_error() = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error() = "out of memory";
    return OPW_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error() = e.what();
    return OPW_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) opw::fail(opw::ErrorKind::InvalidArgument, what);
}

opw::TextFormat text_format(opw_format f) {
  switch (f) {
    case OPW_FORMAT_EDGES: return opw::TextFormat::Edges;
    case OPW_FORMAT_GRAPH6: return opw::TextFormat::Graph6;
    case OPW_FORMAT_MOP: return opw::TextFormat::Mop;
    default: opw::fail(opw::ErrorKind::InvalidArgument, "an explicit output format is required");
  }
}

opw_format detect(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line = line.substr(first);
    if (line.starts_with("mop")) return OPW_FORMAT_MOP;
    if (line.starts_with(">>graph6<<")) return OPW_FORMAT_GRAPH6;
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(0, last + 1).find_first_of(" \t") == std::string_view::npos ? OPW_FORMAT_GRAPH6
                                                                                     : OPW_FORMAT_EDGES;
  }
  return OPW_FORMAT_EDGES;
}

template <class Fn>
opw_status run_command(opw_report** out, Fn&& fn) {
  return guard([&] {
    require(out != nullptr, "null report pointer");
    auto start = std::chrono::steady_clock::now();
    auto* r = new opw_report{fn(), {}};
    r->report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    *out = r;
  });
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* opw_version(void) { return "0.1.0"; }

const char* opw_status_name(opw_status status) {
  switch (status) {
    case OPW_OK: return "ok";
    case OPW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OPW_ERR_PARSE: return "parse error";
    case OPW_ERR_SCOPE: return "out of scope";
    case OPW_ERR_NOT_OUTERPLANAR: return "not outerplanar";
    case OPW_ERR_PRECONDITION: return "precondition failed";
    case OPW_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* opw_last_error(void) { return last_error().c_str(); }

opw_status opw_graph_parse(const char* text, size_t length, opw_format format, opw_graph** out) {
  return guard([&] {
    require(text != nullptr || length == 0, "null text");
    require(out != nullptr, "null graph pointer");
    std::string_view view(text ? text : "", length);
    if (format == OPW_FORMAT_AUTO) format = detect(view);
    auto* g = new opw_graph;
    try {
      switch (format) {
        case OPW_FORMAT_EDGES: {
          auto parsed = opw::parse_edge_list(view);
          g->graph = std::move(parsed.graph);
          g->warnings = std::move(parsed.warnings);
          break;
        }
        case OPW_FORMAT_GRAPH6: g->graph = opw::decode_graph6(view); break;
        case OPW_FORMAT_MOP: g->graph = opw::parse_mop_text(view).graph(); break;
        default: opw::fail(opw::ErrorKind::InvalidArgument, "unknown format");
      }
    } catch (...) {
      delete g;
      throw;
    }
    *out = g;
  });
}

opw_status opw_graph_from_edges(int n, const int* edges, size_t m, opw_graph** out) {
  return guard([&] {
    require(out != nullptr, "null graph pointer");
    require(n >= 0, "negative order");
    require(edges != nullptr || m == 0, "null edge array");
    auto* g = new opw_graph{opw::Graph(n), {}};
    try {
      for (size_t i = 0; i < m; ++i)
        if (!g->graph.add_edge(edges[2 * i], edges[2 * i + 1]))
          g->warnings.push_back("duplicate edge " + std::to_string(edges[2 * i]) + " " + std::to_string(edges[2 * i + 1]));
    } catch (...) {
      delete g;
      throw;
    }
    *out = g;
  });
}

opw_status opw_graph_random_mop(int n, unsigned long long seed, opw_graph** out) {
  return guard([&] {
    require(out != nullptr, "null graph pointer");
    *out = new opw_graph{opw::random_mop(n, seed).graph(), {}};
  });
}

void opw_graph_free(opw_graph* g) { delete g; }

int opw_graph_order(const opw_graph* g) { return g ? g->graph.order() : 0; }

size_t opw_graph_size(const opw_graph* g) { return g ? g->graph.size() : 0; }

size_t opw_graph_warning_count(const opw_graph* g) { return g ? g->warnings.size() : 0; }

const char* opw_graph_warning(const opw_graph* g, size_t i) {
  return g && i < g->warnings.size() ? g->warnings[i].c_str() : nullptr;
}

opw_status opw_graph_serialize(const opw_graph* g, opw_format format, char** out) {
  return guard([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = copy_string(opw::format_graph(g->graph, text_format(format)));
  });
}

void opw_string_free(char* s) { delete[] s; }

opw_status opw_pathwidth(const opw_graph* g, int threads, int* width) {
  return guard([&] {
    require(g != nullptr && width != nullptr, "null argument");
    if (g->graph.order() > opw::kVsMaxOrder)
      opw::fail(opw::ErrorKind::Scope, "pathwidth is computed only for n <= " + std::to_string(opw::kVsMaxOrder));
    *width = opw::vs_pathwidth(g->graph, threads).width;
  });
}

opw_status opw_anchored_pathwidth(const opw_graph* g, int vertex, int* width) {
  return guard([&] {
    require(g != nullptr && width != nullptr, "null argument");
    *width = opw::anchored_pathwidth(g->graph, vertex);
  });
}

opw_status opw_is_outerplanar(const opw_graph* g, int* result) {
  return guard([&] {
    require(g != nullptr && result != nullptr, "null argument");
    *result = opw::is_outerplanar(g->graph) ? 1 : 0;
  });
}

opw_status opw_cmd_pw(const opw_graph* g, opw_engine engine, int anchor, int threads, opw_report** out) {
  return run_command(out, [&] {
    require(g != nullptr, "null graph");
    opw::PwOptions opt;
    opt.engine = engine == OPW_ENGINE_BAGS ? opw::Engine::Bags : engine == OPW_ENGINE_BOTH ? opw::Engine::Both : opw::Engine::Vs;
    if (anchor >= 0) opt.anchor = anchor;
    opt.threads = threads;
    return opw::cmd_pw(g->graph, opt);
  });
}

opw_status opw_cmd_extract(const opw_graph* g, int k, int M, opw_report** out) {
  return run_command(out, [&] {
    require(g != nullptr, "null graph");
    return opw::cmd_extract(g->graph, k, M > 0 ? std::optional<int>(M) : std::nullopt);
  });
}

opw_status opw_cmd_ik(const opw_graph* g, int k, opw_report** out) {
  return run_command(out, [&] {
    require(g != nullptr, "null graph");
    return opw::cmd_ik(g->graph, k);
  });
}

opw_status opw_cmd_mk(int k, int cap, int threads, opw_report** out) {
  return run_command(out, [&] { return opw::cmd_mk(k, cap, threads); });
}

opw_status opw_cmd_enum(int n, int iso, opw_format format, opw_report** out) {
  return run_command(out, [&] {
    return opw::cmd_enum(n, iso != 0, format == OPW_FORMAT_AUTO ? opw::TextFormat::Mop : text_format(format));
  });
}

opw_status opw_cmd_witness(int k, const opw_graph* core, int verify, opw_report** out) {
  return run_command(out, [&] {
    return opw::cmd_witness(k, core ? std::optional<opw::Graph>(core->graph) : std::nullopt, verify != 0);
  });
}

opw_status opw_cmd_verify_paper_table(int kmax, int threads, opw_report** out) {
  return run_command(out, [&] { return opw::cmd_verify_paper_table(kmax, threads); });
}

opw_status opw_cmd_search_remark(int nmax, int threads, opw_report** out) {
  return run_command(out, [&] { return opw::cmd_search_remark(nmax, threads); });
}

opw_status opw_cmd_convert(const opw_graph* g, opw_format to, opw_report** out) {
  return run_command(out, [&] {
    require(g != nullptr, "null graph");
    return opw::cmd_convert(g->graph, text_format(to));
  });
}

int opw_report_passed(const opw_report* r) { return r && r->report.passed() ? 1 : 0; }

const char* opw_report_text(const opw_report* r) { return r ? r->report.text.c_str() : ""; }

const char* opw_report_json(opw_report* r, int include_time) {
  if (!r) return "";
  opw::Json j = r->report.to_json();
  if (!include_time) j.erase("wall_time");
  r->json = j.dump(2) + "\n";
  return r->json.c_str();
}

const char* opw_report_artifact(const opw_report* r, const char* name) {
  if (!r || !name) return nullptr;
  auto it = r->report.artifacts.find(name);
  return it == r->report.artifacts.end() ? nullptr : it->second.c_str();
}

void opw_report_free(opw_report* r) { delete r; }

}  // extern "C"

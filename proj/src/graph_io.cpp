#include <charconv>
#include <sstream>

#include "opwlab/error.hpp"
#include "opwlab/graph.hpp"

namespace opw {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
  ParsedGraph out;
  long long n = -1;
  long long m = -1;
  long long seen_edges = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (tokens.size() != 2) parse_error(line_no, "expected two integers");
    long long a = 0;
    long long b = 0;
    if (!parse_int(tokens[0], a) || !parse_int(tokens[1], b))
      parse_error(line_no, "malformed integer");
    if (n < 0) {
      if (a < 0 || b < 0) parse_error(line_no, "negative header value");
      if (a > 1'000'000) parse_error(line_no, "vertex count too large");
      n = a;
      m = b;
      out.graph = Graph(static_cast<int>(n));
      continue;
    }
    if (seen_edges == m) parse_error(line_no, "more edge lines than the header declares");
    ++seen_edges;
    if (a < 0 || a >= n || b < 0 || b >= n)
      parse_error(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (a == b) parse_error(line_no, "self-loop at vertex " + std::to_string(a));
    if (!out.graph.add_edge(static_cast<int>(a), static_cast<int>(b)))
      out.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge {" +
                             std::to_string(a) + "," + std::to_string(b) + "} collapsed");
  }
  if (n < 0) fail(ErrorKind::Parse, "empty input: missing \"n m\" header");
  if (seen_edges != m)
    fail(ErrorKind::Parse, "header declares " + std::to_string(m) + " edges but " +
                               std::to_string(seen_edges) + " were given");
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

// graph6: N(n) followed by the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte offset by 63.
std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view data) {
  constexpr std::string_view header = ">>graph6<<";
  if (data.starts_with(header)) data.remove_prefix(header.size());
  while (!data.empty() && (data.back() == '\n' || data.back() == '\r' || data.back() == ' '))
    data.remove_suffix(1);
  if (data.empty()) fail(ErrorKind::Parse, "graph6: empty input");
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto c = static_cast<unsigned char>(data[i]);
    if (c < 63 || c > 126)
      fail(ErrorKind::Parse, "graph6: invalid byte at offset " + std::to_string(i));
  }
  auto value = [&](std::size_t i) { return static_cast<long long>(static_cast<unsigned char>(data[i]) - 63); };

  long long n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else if (data.size() >= 2 && value(1) == 63) {
    if (data.size() < 8) fail(ErrorKind::Parse, "graph6: truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  } else {
    if (data.size() < 4) fail(ErrorKind::Parse, "graph6: truncated size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value(i);
    pos = 4;
  }
  if (n > 1'000'000) fail(ErrorKind::Scope, "graph6: vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const long long needed = (bits + 5) / 6;
  if (static_cast<long long>(data.size() - pos) < needed)
    fail(ErrorKind::Parse, "graph6: truncated bit stream");
  if (static_cast<long long>(data.size() - pos) > needed)
    fail(ErrorKind::Parse, "graph6: trailing bytes after the bit stream");

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      long long byte = value(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace opw

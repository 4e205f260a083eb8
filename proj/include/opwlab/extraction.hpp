#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opwlab/graph.hpp"
#include "opwlab/outerplanar.hpp"
#include "opwlab/rational.hpp"
#include "opwlab/vertex_set.hpp"
#include "opwlab/width.hpp"

namespace opw {

// One level of the recursion. All vertex ids refer to the input graph.
// Removing {a, b} (the endpoints, as vertices) from the current subproblem
// leaves `h` as a component; the next level works on the rest.
struct TraceStep {
  enum class Rule {
    Base,      // small subproblem: take the first min(M, n) vertices
    Exact,     // component of size exactly M taken whole
    Split,     // component H with face abc; H1 and H2 taken
    TakeAll,   // component H taken whole, glued at c when c >= 0
    Fallback,  // no qualifying component: keep everything but a and b
  };
  Rule rule = Rule::Base;
  int n = 0;
  int a = -1;
  int b = -1;
  int c = -1;
  std::vector<int> h;
  std::vector<int> h1;
  std::vector<int> h2;
  std::vector<int> taken;
};

std::string to_string(TraceStep::Rule rule);
std::optional<TraceStep::Rule> rule_from_string(const std::string& name);

struct ExtractionCertificate {
  enum class Method { General, Pw2 };
  Method method = Method::General;
  int n = 0;
  int k = 0;
  int M = 0;
  Rational claimed_bound;  // M n / (M + 3), or 5n/7 for Pw2
  std::vector<int> selected;
  PathDecomposition decomposition;  // of G[selected], input ids
  std::vector<TraceStep> trace;
  std::optional<std::string> assumption;  // set when M was trusted rather than checked
};

constexpr int kMCheckMaxOrder = kMopEnumerationMaxOrder;

// Whether every outerplanar graph on at most M vertices has pathwidth <= k,
// decided by enumeration (M <= 16). Results are cached.
bool M_holds(int k, int M);

ExtractionCertificate extract_general(const Graph& g, int k, int M);
ExtractionCertificate extract_pw2(const Graph& g);

struct SplitChoice {
  Edge edge;
  VertexSet component;  // Mop positions
};

// Over every edge {u,v} and every component H of m - {u,v}: the smallest H
// with |H| > threshold (strict) or >= threshold. Ties go to the smaller edge,
// then to the component with the smaller least member.
std::optional<SplitChoice> find_split_edge(const Mop& m, int threshold, bool strict);
std::optional<SplitChoice> find_component_of_size(const Mop& m, int size);

struct FaceSplit {
  int c = -1;
  VertexSet h1;  // side of ac inside H
  VertexSet h2;  // side of bc inside H
};

FaceSplit split_face(const Mop& m, const Edge& ab, const VertexSet& h);

// left ++ reverse(right); c must lie in the last bag of both inputs and be
// their only common vertex.
PathDecomposition glue_anchored(const PathDecomposition& left, const PathDecomposition& right, int c);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

CertificateCheck verify_certificate(const Graph& g, const ExtractionCertificate& cert);

Rational extraction_bound(ExtractionCertificate::Method method, int M, int n);

}  // namespace opw

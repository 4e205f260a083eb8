#include "opwlab/error.hpp"
#include "opwlab/serialize.hpp"

namespace opw {

Json to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json to_json(const PathDecomposition& pd) {
  Json bags = Json::array();
  for (const auto& bag : pd.bags) bags.push_back(bag);
  return bags;
}

Json to_json(const Mop& m) {
  Json chords = Json::array();
  for (const auto& c : m.chords()) chords.push_back({c.u, c.v});
  return Json{{"n", m.order()}, {"chords", chords}};
}

Json to_json(const ExtractionCertificate& cert) {
  Json trace = Json::array();
  for (const auto& s : cert.trace) {
    Json step{{"rule", to_string(s.rule)}, {"n", s.n}};
    if (s.rule != TraceStep::Rule::Base) step["edge"] = {s.a, s.b};
    if (s.c >= 0) step["c"] = s.c;
    step["sizes"] = {{"H", s.h.size()}, {"H1", s.h1.size()}, {"H2", s.h2.size()}, {"taken", s.taken.size()}};
    step["H"] = s.h;
    step["H1"] = s.h1;
    step["H2"] = s.h2;
    step["taken"] = s.taken;
    trace.push_back(std::move(step));
  }
  Json j{{"method", cert.method == ExtractionCertificate::Method::Pw2 ? "pw2" : "general"},
         {"n", cert.n},
         {"k", cert.k},
         {"M", cert.M},
         {"bound", to_json(cert.claimed_bound)},
         {"selected", cert.selected},
         {"bags", to_json(cert.decomposition)},
         {"trace", trace}};
  if (cert.assumption) j["assumption"] = *cert.assumption;
  return j;
}

PathDecomposition decomposition_from_json(const Json& j) {
  PathDecomposition pd;
  try {
    for (const auto& bag : j) pd.bags.push_back(bag.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("bags: ") + e.what());
  }
  return pd;
}

ExtractionCertificate certificate_from_json(const Json& j) {
  ExtractionCertificate cert;
  try {
    const std::string method = j.at("method").get<std::string>();
    if (method != "pw2" && method != "general") fail(ErrorKind::Parse, "unknown method '" + method + "'");
    cert.method = method == "pw2" ? ExtractionCertificate::Method::Pw2 : ExtractionCertificate::Method::General;
    cert.n = j.at("n").get<int>();
    cert.k = j.at("k").get<int>();
    cert.M = j.at("M").get<int>();
    cert.claimed_bound = Rational(j.at("bound").at("num").get<std::int64_t>(), j.at("bound").at("den").get<std::int64_t>());
    cert.selected = j.at("selected").get<std::vector<int>>();
    cert.decomposition = decomposition_from_json(j.at("bags"));
    for (const auto& s : j.at("trace")) {
      TraceStep step;
      auto rule = rule_from_string(s.at("rule").get<std::string>());
      if (!rule) fail(ErrorKind::Parse, "unknown trace rule");
      step.rule = *rule;
      step.n = s.at("n").get<int>();
      if (s.contains("edge")) {
        step.a = s["edge"].at(0).get<int>();
        step.b = s["edge"].at(1).get<int>();
      }
      step.c = s.value("c", -1);
      step.h = s.at("H").get<std::vector<int>>();
      step.h1 = s.at("H1").get<std::vector<int>>();
      step.h2 = s.at("H2").get<std::vector<int>>();
      step.taken = s.at("taken").get<std::vector<int>>();
      cert.trace.push_back(std::move(step));
    }
    if (j.contains("assumption")) cert.assumption = j["assumption"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("certificate: ") + e.what());
  }
  return cert;
}

}  // namespace opw

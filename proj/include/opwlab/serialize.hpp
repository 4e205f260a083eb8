#pragma once

#include "json.hpp"

#include "opwlab/extraction.hpp"
#include "opwlab/outerplanar.hpp"
#include "opwlab/rational.hpp"
#include "opwlab/width.hpp"

namespace opw {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const PathDecomposition& pd);
Json to_json(const Mop& m);
Json to_json(const ExtractionCertificate& cert);

PathDecomposition decomposition_from_json(const Json& j);
ExtractionCertificate certificate_from_json(const Json& j);

}  // namespace opw

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polyideal/certificates.hpp"
#include "polyideal/konig.hpp"
#include "polyideal/lattice.hpp"

namespace polyideal {

using Json = nlohmann::ordered_json;

Json vertex_json(Vertex v);
Json cells_json(const std::vector<Cell>& cells);
Json checks_json(const std::vector<Check>& checks);

Json to_json(const ClassificationRecord& r);
Json to_json(const GroebnerBasis& G);
Json to_json(const KnutsonReport& r);
Json to_json(const KonigCertificate& c, const KonigVerification& v);
Json to_json(const PrimeVerdict& v);
Json to_json(const ExtractionReport& r);
Json to_json(const std::vector<ChiSweep>& sweep);

// "key: value" lines in field order; nested objects indent, lists use "- " items.
std::string render_text(const Json& j);

}  // namespace polyideal

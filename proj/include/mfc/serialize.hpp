#pragma once

#include "mfc/search.hpp"

#include <json.hpp>

namespace mfc {

using Json = nlohmann::json;

Json to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j);

Json to_json(const IntPoly& g);
IntPoly poly_from_json(const Json& j);

Json to_json(const ModularDatum& md);
ModularDatum datum_from_json(const Json& j);

Json to_json(const FusionRing& fr);
FusionRing ring_from_json(const Json& j);

Json to_json(const SearchCertificate& c);
SearchCertificate certificate_from_json(const Json& j);

// Exact value together with a numeric rendering, for human-facing payloads.
Json describe(const CycNum& x);

}  // namespace mfc

#pragma once

#include "exsym/central.hpp"
#include "exsym/classifier.hpp"
#include "exsym/quadext_json.hpp"

namespace exsym {

// Schema "weakext.v1". Malformed input throws std::invalid_argument.
Json central_datum_to_json(const CentralExtensionDatum& d);
CentralExtensionDatum central_datum_from_json(const Json& j);

Json classifier_to_json(const ClassifierDatum& d);
ClassifierDatum classifier_from_json(const Json& j);

}  // namespace exsym

#pragma once

// JSON encodings shared by the session writer and the command reports.

#include <json.hpp>

#include "cochain/session.hpp"

namespace cochain::detail {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Json matrix_to_json(const Matrix& m);
Json complex_to_json(const CochainComplex& c);
Json map_to_json(const MapEntry& entry);
Json homotopy_to_json(const HomotopyEntry& entry);
Json roof_to_json(const RoofEntry& entry);

}  // namespace cochain::detail

#pragma once

#include <string>

#include <json.hpp>

#include "opensys/dynam.hpp"
#include "opensys/sarel.hpp"

namespace opensys {

/// {"left", "right", "internal": [labels], "internal_kinds",
///  "variables": [names, informational],
///  "equations"/"inequalities": [[{"coefficient": "p/q", "monomial": [[var, power], ...]}, ...]],
///  "linear": bool}
nlohmann::ordered_json to_json(const ConstraintRelation& r);

/// Throws FormatError on a missing or ill-typed field or a wrong linear flag.
ConstraintRelation relation_from_json(const nlohmann::ordered_json& j);

/// Parses text; syntax errors become FormatError with the byte offset.
ConstraintRelation relation_from_json_text(const std::string& text);

/// Species, boundary legs and field components of an open system.
nlohmann::ordered_json to_json(const OpenSystem& sys);
std::string to_text(const OpenSystem& sys);

}  // namespace opensys

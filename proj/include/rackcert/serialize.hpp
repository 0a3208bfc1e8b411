#pragma once

// JSON forms of the library objects. Every `*_from_json` throws InputError on
// malformed input and never trusts the payload beyond its shape; verification
// is left to the verifiers.

#include <string>

#include "json.hpp"
#include "rackcert/braided.hpp"
#include "rackcert/criteria.hpp"

namespace rackcert {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

json to_json(const Permutation& x);
json to_json(const PrimeFieldMatrix& x);
json to_json(const Element& x);
json to_json(const RackTable& t);
json to_json(const Cocycle& q);
json to_json(const Diagnosis& d);
json to_json(const Witness& w);
json to_json(const ClassRef& c);
json to_json(const Certificate& c);
json to_json(const ConditionalReport& r);

Permutation permutation_from_json(const json& j);
PrimeFieldMatrix matrix_from_json(const json& j);
Element element_from_json(const json& j);
RackTable rack_from_json(const json& j);
Cocycle cocycle_from_json(const json& j);
Witness witness_from_json(const json& j);
ClassRef class_from_json(const json& j);
Certificate certificate_from_json(const json& j);

/// Compact, key-sorted text; equal certificates give equal strings.
std::string certificate_to_string(const Certificate& c);
Certificate certificate_from_string(const std::string& text);

} // namespace rackcert

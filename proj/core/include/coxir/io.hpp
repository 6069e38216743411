#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "coxir/graph.hpp"
#include "coxir/ir.hpp"

namespace coxir::io {

// Input problem: malformed JSON, unknown fields, or values that do not
// assemble into a valid system/datum/classification. The message carries the
// offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One parsed input document: always a system, plus at most one of a datum or
// a classification.
//
// Schema (all complex numbers are [re, im] arrays; bond orders are integers
// or the string "inf"; pair keys are "a-b", ordered for scalars, with the
// canonical chord orientation for chi; generator labels must not contain '-'):
//
//   {
//     "system": { "generators": ["s","t"], "bonds": { "s-t": 3 } },
//     "datum": {
//       "bonds":   { "s-t": {"k": 1} | {"z": [4.0, 0.0]} | {"absorb": "s"} },
//       "scalars": { "s-t": [1.0, 0.0] }
//     },
//     "classification": { "bonds": { ... }, "chi": { "s-t": [1.0, 0.0] } }
//   }
//
// Omitted datum bonds default to k = 1 (finite) / z = 4 (infinite); omitted
// scalars default to 1. Unknown fields are rejected.
struct InputDocument {
  CoxeterSystem system;
  std::optional<IRDatum> datum;
  std::optional<Classification> classification;
};

InputDocument parse_input(const std::string& json_text);
InputDocument load_input(const std::string& path);

// The resolved datum of a document: the explicit one, the canonical datum of
// the classification, or the geometric defaults when only a system is given.
IRDatum resolve_datum(const InputDocument& doc);

// Canonical JSON serializations; every emitted document re-parses to an equal
// object, bit-level on the number encoding. indent < 0 means compact.
std::string datum_to_json(const IRDatum& datum, int indent = -1);
IRDatum datum_from_json(const std::string& json_text);

std::string representation_to_json(const Representation& rep, int indent = -1);
Representation representation_from_json(const std::string& json_text);

std::string classification_to_json(const Classification& c, int indent = -1);

// Chord key "from-to" in the canonical orientation.
std::string chord_id(const CoxeterSystem& system, const OrientedEdge& chord);

}  // namespace coxir::io

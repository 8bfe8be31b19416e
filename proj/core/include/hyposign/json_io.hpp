#pragma once

#include <string>

#include "hyposign/realize.hpp"
#include "hyposign/witness.hpp"

namespace hyposign {

/// Witness document:
///   {"roots": ["-1/1","3/2","8/5"], "coeffs": ["12/5","-7/10","-21/10","1/1"],
///    "pattern": "+--+", "word": "NPP",
///    "meta": {"method": "...", "seed": 0, "params": {...}}}
/// Rationals are "numerator/denominator" strings, coeffs index = exponent.
std::string witness_to_json(const Witness& w, int indent = -1);

/// Parses and re-validates (expansion, pattern and word are recomputed and
/// must match). Throws ParseError on malformed input or failed validation.
Witness witness_from_json(const std::string& text);

/// Report document:
///   {"sp": "...", "config": {"budget":..,"seed":..,"margins":{...}},
///    "words": [{"word": "...", "status": "found"|"not-found",
///               "witness": {...}?, "restartsUsed": n}]}
std::string report_to_json(const RealizabilityReport& report, int indent = -1);

std::string verdict_to_json(const CanonicityVerdict& verdict, int indent = -1);

}  // namespace hyposign

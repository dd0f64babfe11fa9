// Serialization of divisor classes.
//
// JSON value form: {"l": c0, "e": [c1,c2,c3,c4,c5,c6]} with the signed
// basis D = c0*l + sum c_i*e_i (so the usual b_i equal -c_i).
// The string form follows the usual notation "a*l - b1*e1 - ... - b6*e6"
// with optional '*', optional terms and free signs; "0" is the zero class.
#pragma once

#include <string>
#include <string_view>

#include "lacm/picard.hpp"

#include "json.hpp"

namespace lacm {

// Accepts either the JSON form or the notation string; enforces the
// |coefficient| <= 1e6 input bound.  Throws ParseError with the offending
// token on malformed input.
DivisorClass parse_class(std::string_view text);

nlohmann::json class_to_json(const DivisorClass& d);

// Renders coefficients exactly as stored (no re-sorting), e.g.
// "2l - 2e1 - e2 - e3" or "e5 + e6"; re-parses to the identical vector.
std::string class_to_string(const DivisorClass& d);

// Rendering used by the table emitters: the S6-representative written with
// b_i nonincreasing, the visual convention of the printed tables.
std::string orbit_rep_string(const DivisorClass& d);
DivisorClass orbit_rep_class(const DivisorClass& d);  // the class that string denotes

}  // namespace lacm

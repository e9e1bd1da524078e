#pragma once

#include <string_view>

#include "operon/gf2/bool_poly.hpp"

namespace operon::gf2 {

/// Parses the textual polynomial syntax: terms joined by `+`, factors joined
/// by `*`, each factor a variable name, `1` or `0`. Whitespace is ignored;
/// juxtaposition is rejected. Throws operon::ParseError.
BoolPoly parse_poly(std::string_view text, const VarSetPtr& vars);

} // namespace operon::gf2

#pragma once

#include <string>

#include "syzcurve/poly.hpp"

namespace syzcurve {

// Parses an arithmetic expression in x, y, z with integer or rational
// coefficients, `^` powers, `*` products, `+`/`-` and parentheses, then
// expands it. Fails if the result is inhomogeneous or identically zero.
HomPoly parse_poly(const std::string& text);

}  // namespace syzcurve

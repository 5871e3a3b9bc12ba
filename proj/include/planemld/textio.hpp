#pragma once

#include <string>

#include "planemld/discrepancy.hpp"

namespace planemld {

/// Grammar: ideals separated by ';'; an ideal is a comma-separated list of
/// polynomial generators, optionally followed by "@ <scalar>" (exponent,
/// default 1). Example: "x^2, y^3 @ 1; x*y @ 1/2". Exponents must be
/// strictly positive. Throws ParseError / std::invalid_argument.
PolyMultiIdeal parse_multiideal(const std::string& text,
                                CoefficientField field);

/// Inverse of parse_multiideal up to whitespace; exponents always printed.
std::string to_text(const PolyMultiIdeal& P);
std::string to_text(const MultiIdeal& M);

}  // namespace planemld

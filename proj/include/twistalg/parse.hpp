#pragma once

#include <stdexcept>
#include <string>

#include "twistalg/nc_poly.hpp"

namespace twistalg {

struct ParseError : std::runtime_error {
    ParseError(size_t position, const std::string& expected, const std::string& found)
        : std::runtime_error("parse error at offset " + std::to_string(position) + ": expected " +
                             expected + ", found " + found),
          position(position),
          expected(expected),
          found(found) {}
    size_t position;
    std::string expected;
    std::string found;
};

/// Parses an expression over the grammar
///   expr   := ["-"] term { ("+"|"-") term }
///   term   := factor { ["*"|"/"] factor }
///   factor := atom [ "^" int ]
///   atom   := "A"|"B"|"C"|"I"|"m"|"b"| uint |"(" expr ")"|"[" expr "," expr "]"
/// into a polynomial; "[P,Q]" denotes P*Q - Q*P, juxtaposition multiplies,
/// "/" requires a scalar divisor, negative exponents a scalar base.
NcPoly parse(const std::string& text);

/// Convenience wrapper: parses and requires a pure rational value.
Rational parse_rational(const std::string& text);

}  // namespace twistalg

#pragma once

#include <string_view>

#include "ratprime/field.hpp"
#include "ratprime/ratfun.hpp"

namespace ratprime {

/// Parses a rational function in x:
///
///     expr   := ['-'] term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := base ('^' natural)?
///     base   := 'x' | integer | '(' expr ')'
///
/// Integer literals map into `field`. Multiplication must be explicit.
/// Throws ParseError with a byte offset, or DivisionByZero.
RatFun parse_expression(std::string_view source, const Field& field);

/// Reads "Q" or "F<p>".
Field parse_field(std::string_view text);

} // namespace ratprime

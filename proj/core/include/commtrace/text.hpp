#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "commtrace/polynomial.hpp"
#include "commtrace/traceinv.hpp"

namespace commtrace {

// Syntax error carrying the 0-based offset into the input where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Trace-expression grammar (whitespace-insensitive):
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := rational | [rational '*'] factor ('*' factor)*
//   factor   := 'tr' '(' word ')'
//   word     := matrix ('*' matrix)*
//   matrix   := 'X' integer            (integer >= 1)
//   rational := integer ['/' integer]  (nonzero denominator)
//
// A bare rational term is the empty trace product, so that every rendered
// expression (including "0") parses back. Words are cyclically normalized.
TraceExpression parse_expression(std::string_view text);

// Polynomial grammar, the inverse of to_string(Polynomial):
//
//   poly     := ['-'] term (('+' | '-') term)*
//   term     := rational | [rational '*'] power ('*' power)*
//   power    := variable ['^' integer]
//   variable := 'x[' i ';' h ',' k ']' | 'x[' i ',' j ']' | 'x[' i ']'
//
// All variables must share a family. A polynomial without variables takes
// `constant_family` (abstract when not given).
Polynomial parse_polynomial(std::string_view text,
                            std::optional<Family> constant_family = std::nullopt);

}  // namespace commtrace

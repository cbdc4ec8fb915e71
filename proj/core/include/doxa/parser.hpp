#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "doxa/formula.hpp"

namespace doxa {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  int position;
};

// Concrete syntax (ASCII):
//
//   formula  := iff
//   iff      := imp ("<->" imp)*                      left-associative
//   imp      := or ("->" imp)?                        right-associative
//   or       := and ("|" and)*
//   and      := unary ("&" unary)*
//   unary    := "~" unary | modal unary | atomexpr
//   modal    := ("B"|"dB") "{" agent "}"
//             | ("D"|"dD"|"DC"|"dDC"|"DB"|"dDB") "{" agent ("," agent)* "}"
//   atomexpr := "top" | "bot" | "Inc" "{" agent ("," agent)* "}"
//             | ident | "(" formula ")"
//   ident    := [a-z][a-zA-Z0-9_]*        (atoms and agent names)
//
// The d-prefixed operators are duals and expand during parsing:
// dD{G}x parses to ~D{G}~x, with no simplification of double negations.
FormulaPtr parse_formula(std::string_view text);

}  // namespace doxa

#pragma once

#include <string_view>

#include "resloc/sympoly.hpp"

namespace resloc {

// Parses an integer-coefficient expression in q1..qm:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | q<k> | sigma(a, b, ...) | c_top_sym(l) | '(' expr ')'
// sigma(lambda) is the Schur polynomial s_lambda, so sigma(1) = q1 + q2 and
// sigma(1,1) = q1*q2 when m = 2. c_top_sym(l) needs m = 2.
// Errors: SyntaxError (with the 1-based column), NotSymmetric.
SymPoly parse_tau(std::string_view text, int m);

}  // namespace resloc

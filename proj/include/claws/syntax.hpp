#pragma once

// Concrete syntax for differential polynomials.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := atom ('^' integer)?
//   atom    := integer | 't' | 'x' | 'u' | 'u_' [tx]+ | 'u[' int ',' int ']'
//            | name | '(' expr ')'
//
// u_txx and u[1,2] denote the same jet; letters after "u_" may come in any
// order.  Division is allowed only by a nonzero constant.

#include <map>
#include <string>
#include <string_view>

#include "claws/expr.hpp"

namespace claws {

/// Throws SyntaxError (message carries the 0-based offset) or NonPolynomial.
/// `names` supplies user-defined identifiers.
DiffExpr parse_expr(std::string_view text, const std::map<std::string, DiffExpr>& names = {});

/// Canonical text; parse_expr(to_string(e)) == e.
std::string to_string(const DiffExpr& e);
std::string to_string(const Rational& q);
std::string jet_name(JetIndex jet);

}  // namespace claws

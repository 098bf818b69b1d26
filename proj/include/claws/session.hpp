#pragma once

// Session files: plain key/value text describing one equation.
//
//   # comment
//   lead = u_t
//   rhs = -u*u_x - u_xxx
//   name E = 1/2*u^2 + u_xx
//   order = 2          # ansatz defaults, all optional
//   jet-degree = 2
//   t-degree = 1
//   x-degree = 1

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "claws/conslaw.hpp"
#include "claws/soln.hpp"

namespace claws {

struct Session {
  NormalPDE pde;
  std::map<std::string, DiffExpr> names;
  Ansatz ansatz;

  /// Parses an expression with the session's names in scope.
  DiffExpr parse(std::string_view text) const;
};

/// Throws SessionError for malformed lines or missing keys, and propagates
/// SyntaxError, NonPolynomial and NotNormal from the expressions.
Session parse_session(std::string_view text);
Session load_session(const std::filesystem::path& path);

}  // namespace claws

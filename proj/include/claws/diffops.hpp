#pragma once

// Total derivatives and the variational calculus built on them.

#include "claws/expr.hpp"

namespace claws {

/// A pair (T, X): density T and flux X of a space-time divergence.
struct ConservedCurrent {
  DiffExpr T;
  DiffExpr X;

  friend bool operator==(const ConservedCurrent&, const ConservedCurrent&) = default;
};

ConservedCurrent operator+(const ConservedCurrent& a, const ConservedCurrent& b);
ConservedCurrent operator-(const ConservedCurrent& a, const ConservedCurrent& b);
ConservedCurrent scale(const ConservedCurrent& cur, const Rational& c);

/// D_t f or D_x f.
DiffExpr total_derivative(const DiffExpr& f, Coord axis);
/// D_t^{k.nt} D_x^{k.nx} f.
DiffExpr total_derivative(const DiffExpr& f, JetIndex k);

/// D_t T + D_x X.
DiffExpr divergence(const ConservedCurrent& cur);

/// f'(g) = sum_J f_{u_J} D^J g.
DiffExpr frechet(const DiffExpr& f, const DiffExpr& g);
/// f'*(h) = sum_J (-D)^J (h f_{u_J}).
DiffExpr frechet_adjoint(const DiffExpr& f, const DiffExpr& h);
/// Euler-Lagrange operator E_u; equal to frechet_adjoint(f, 1).
DiffExpr euler(const DiffExpr& f);
/// True iff euler(f) vanishes identically.
bool is_divergence(const DiffExpr& f);

/// Returns Psi with h f'(g) - g f'*(h) = D_t Psi.T + D_x Psi.X identically.
///
/// Each term h f_{u_J} D_t^i D_x^j g is integrated by parts one derivative at a
/// time, t-derivatives first (feeding Psi.T) and then x-derivatives (feeding
/// Psi.X).  The result therefore matches any other choice of peeling order only
/// up to a locally trivial current.
ConservedCurrent boundary_current(const DiffExpr& f, const DiffExpr& g, const DiffExpr& h);

/// Returns (A, B) with f = D_t A + D_x B.  Uses the homotopy along u -> lambda u:
/// the jet-degree-d part of f contributes boundary_current(f_d, u, 1) / d, and
/// the jet-free part f_0(t, x) goes into B as its x-antiderivative.
/// Throws NotADivergence when euler(f) != 0.
ConservedCurrent invert_divergence(const DiffExpr& f);

}  // namespace claws

#pragma once

// Normal PDEs in monic solved form u_L = g, evaluation on the solution space,
// and linear differential operators in the total derivatives.

#include <map>
#include <memory>

#include "claws/diffops.hpp"
#include "claws/expr.hpp"

namespace claws {

class NormalPDE;

/// Validates u_lead = rhs.  The leading derivative must contain at least one
/// t-derivative, and every jet J in rhs must satisfy J.nt < lead.nt or
/// (J.nt == lead.nt and J.nx < lead.nx); this excludes the leading derivative
/// and its consequences and makes the elimination rewrite terminate.
/// Throws NotNormal otherwise.
NormalPDE make_pde(JetIndex lead, const DiffExpr& rhs);

class NormalPDE {
 public:
  JetIndex lead() const { return lead_; }
  const DiffExpr& rhs() const { return rhs_; }
  /// G = u_lead - rhs.
  const DiffExpr& G() const { return G_; }
  /// Differential order N of G.
  int order() const;
  /// True for u_lead and its differential consequences.
  bool is_consequence(JetIndex jet) const { return jet.dominates(lead_); }

  /// Fully eliminated image of the consequence jet u_{lead+k} on solutions.
  const DiffExpr& consequence_image(JetIndex k) const;

 private:
  friend NormalPDE make_pde(JetIndex lead, const DiffExpr& rhs);
  struct ImageCache;

  NormalPDE(JetIndex lead, DiffExpr rhs);

  JetIndex lead_;
  DiffExpr rhs_;
  DiffExpr G_;
  std::shared_ptr<ImageCache> cache_;
};

/// f|_E: every consequence jet replaced by its image.  Zero iff f vanishes on
/// solutions.
DiffExpr restrict_to_solutions(const DiffExpr& f, const NormalPDE& pde);

/// sum_k coeffs[k] * D^k.
struct LinDiffOp {
  std::map<JetIndex, DiffExpr> coeffs;

  void add(JetIndex k, const DiffExpr& c);
  bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const LinDiffOp&, const LinDiffOp&) = default;
};

LinDiffOp operator+(const LinDiffOp& a, const LinDiffOp& b);
LinDiffOp operator-(const LinDiffOp& a, const LinDiffOp& b);

/// R(f) = sum_k coeffs[k] D^k f.
DiffExpr apply_operator(const LinDiffOp& R, const DiffExpr& f);
/// R*(f) = sum_k (-D)^k (coeffs[k] f).
DiffExpr adjoint_operator(const LinDiffOp& R, const DiffExpr& f);
/// The formal adjoint R* written in the form sum_k c_k D^k.
LinDiffOp adjoint(const LinDiffOp& R);
/// The operator g -> f'(g).
LinDiffOp frechet_operator(const DiffExpr& f);
/// Coefficients restricted to solutions, zero coefficients dropped.
LinDiffOp restrict_to_solutions(const LinDiffOp& R, const NormalPDE& pde);

/// Returns R_f with apply_operator(R_f, G) == f identically.  Throws
/// NotOnSolutionSpace when f does not vanish on solutions.
///
/// The highest consequence jet v = u_{lead+k} of the remainder is written as
/// D^k G + w with w = D^k rhs; then f(v) = f(w) + (v - w) q(v, w), q goes to
/// coefficient k, and the process repeats on f(w).
LinDiffOp extract_operator(const DiffExpr& f, const NormalPDE& pde);

}  // namespace claws

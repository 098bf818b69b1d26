#pragma once

// Conservation laws and their multipliers.

#include <functional>
#include <vector>

#include "claws/diffops.hpp"
#include "claws/ratlin.hpp"
#include "claws/soln.hpp"

namespace claws {

/// Bounds of a polynomial ansatz: jets up to order max_order, at most
/// max_jet_degree jet factors, t and x powers up to the given degrees.
struct Ansatz {
  int max_order = 1;
  int max_jet_degree = 1;
  int max_t_degree = 0;
  int max_x_degree = 0;
};

/// restrict(D_t T + D_x X) == 0.
bool verify_conservation_law(const ConservedCurrent& cur, const NormalPDE& pde);

/// Characteristic multiplier Q = R*(1) where D_t T + D_x X = R(G).
/// Throws NotConserved.
DiffExpr multiplier_from_current(const ConservedCurrent& cur, const NormalPDE& pde);

/// A conserved current is locally trivial iff its multiplier vanishes on
/// solutions.  Throws NotConserved.
bool is_trivial_current(const ConservedCurrent& cur, const NormalPDE& pde);

/// euler(Q G) == 0 identically.
bool check_multiplier(const DiffExpr& Q, const NormalPDE& pde);

/// G'*(Q) vanishes on solutions.
bool check_adjoint_symmetry(const DiffExpr& Q, const NormalPDE& pde);

/// Checks R_Q* + Q' = 0 on solutions, where G'*(Q) = R_Q(G).  The coefficient
/// of each D^k must vanish on solutions; off solutions R_Q is not unique.
/// Throws NotAdjointSymmetry.
bool helmholtz_check(const DiffExpr& Q, const NormalPDE& pde);

/// (T, X) with D_t T + D_x X = Q G exactly.  Throws NotAMultiplier.
ConservedCurrent current_from_multiplier(const DiffExpr& Q, const NormalPDE& pde);

/// Basis of all multipliers in the ansatz span.  The leading derivative and
/// its consequences are left out of the ansatz.  Throws InvalidAnsatz unless
/// ansatz.max_order is below the order of the equation.
std::vector<DiffExpr> solve_multipliers(const NormalPDE& pde, const Ansatz& ansatz);

/// Monomials t^a x^b prod u_J^e with J drawn from `jets`, total jet degree
/// <= ansatz.max_jet_degree, sorted from most to least complex.
std::vector<Monomial> ansatz_monomials(const Ansatz& ansatz, const std::vector<JetIndex>& jets);

/// Jets of order <= max_order in JetIndex order.
std::vector<JetIndex> jets_up_to(int max_order);

/// Solution vectors (in `unknowns` coordinates) of the homogeneous system
/// condition(sum c_i unknowns[i]) == 0, where `condition` is linear.  Vectors
/// come back in reduced row echelon form, each rescaled to coprime integers
/// with a positive leading entry.
std::vector<QVector> solve_linear_conditions(
    const std::vector<Monomial>& unknowns,
    const std::function<DiffExpr(const DiffExpr&)>& condition);

/// sum_i coords[i] * unknowns[i]
DiffExpr combine(const std::vector<Monomial>& unknowns, const std::vector<Rational>& coords);

}  // namespace claws

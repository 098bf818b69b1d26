#pragma once

// Symmetries of a normal PDE and their action on conservation laws.

#include <variant>
#include <vector>

#include "claws/conslaw.hpp"
#include "claws/ratlin.hpp"
#include "claws/soln.hpp"

namespace claws {

/// Symmetry in characteristic form P d/du.
struct Characteristic {
  DiffExpr P;
};

/// Point/generalized generator tau d/dt + xi d/dx + eta d/du.
struct FullGenerator {
  DiffExpr tau;
  DiffExpr xi;
  DiffExpr eta;
};

using SymmetryGen = std::variant<Characteristic, FullGenerator>;

/// P = eta - tau u_t - xi u_x for a full generator, P itself otherwise.
DiffExpr characteristic(const SymmetryGen& gen);

/// G'(P) vanishes on solutions.
bool check_symmetry(const DiffExpr& P, const NormalPDE& pde);

/// G' = G'* as operators.
bool is_self_adjoint(const NormalPDE& pde);

/// Basis of symmetry characteristics in the ansatz span, modulo characteristics
/// that vanish on solutions.  Unlike multipliers, the leading derivative and
/// its consequences are allowed in the ansatz.
std::vector<DiffExpr> solve_symmetries(const NormalPDE& pde, const Ansatz& ansatz);

/// For a characteristic: (T'(P), X'(P)).  For a full generator:
///   T_X = pr X(T) + T D_x xi - X D_x tau,
///   X_X = pr X(X) + X D_t tau - T D_t xi,
/// with pr X(f) = f'(P) + tau D_t f + xi D_x f.
/// Throws NotASymmetry, NotConserved.
ConservedCurrent act_on_current(const SymmetryGen& gen, const ConservedCurrent& cur,
                                const NormalPDE& pde);

/// Q_X = R_P*(Q) - R_Q*(P), where G'(P) = R_P(G) and G'*(Q) = R_Q(G).
/// Throws NotASymmetry, NotAMultiplier.
DiffExpr act_on_multiplier(const DiffExpr& P, const DiffExpr& Q, const NormalPDE& pde);

/// Psi_G(P, Q) = boundary_current(G, P, Q); conserved whenever P is a symmetry
/// and Q an adjoint-symmetry.  Throws NotASymmetry, NotAdjointSymmetry.
ConservedCurrent psi_current(const DiffExpr& P, const DiffExpr& Q, const NormalPDE& pde);

enum class Verdict { Invariant, Homogeneous, NotHomogeneous };

struct ClassificationResult {
  Verdict verdict = Verdict::NotHomogeneous;
  /// Zero for Invariant; meaningful for Homogeneous.
  Rational lambda;
  /// Q_X, restricted to solutions unless the comparison is off solutions.
  DiffExpr action_multiplier;
  /// action_multiplier - lambda Q; zero unless NotHomogeneous.
  DiffExpr residual;
};

enum class Comparison {
  OnSolutions,   // compare Q_X and Q after restriction
  OffSolutions,  // compare Q_X and Q as they stand
};

/// Tests Q_X = lambda Q for a constant lambda.  Throws NotASymmetry,
/// NotAMultiplier, TrivialMultiplier.
ClassificationResult classify(const DiffExpr& P, const DiffExpr& Q, const NormalPDE& pde,
                              Comparison mode = Comparison::OnSolutions);

struct HomogeneousLaw {
  Rational lambda;
  /// Coordinates in the input basis.
  QVector coords;
  DiffExpr multiplier;
};

struct ActionMatrix {
  /// Column j holds the coordinates of Q_X for basis[j], on solutions.
  QMatrix matrix;
  std::vector<HomogeneousLaw> homogeneous;
  /// Monic factor of the characteristic polynomial without rational roots.
  std::vector<Rational> unresolved;
};

/// Matrix of Q -> Q_X on span(basis).  Throws NotClosed when some image leaves
/// the span, NotAMultiplier / NotASymmetry on bad input, TrivialMultiplier
/// when the basis is dependent on solutions.
ActionMatrix action_matrix(const DiffExpr& P, const std::vector<DiffExpr>& basis,
                           const NormalPDE& pde);

}  // namespace claws

#include "claws/symmetry.hpp"

#include <map>
#include <optional>
#include <string>

#include "claws/error.hpp"

namespace claws {

DiffExpr characteristic(const SymmetryGen& gen) {
  if (const auto* c = std::get_if<Characteristic>(&gen)) return c->P;
  const auto& full = std::get<FullGenerator>(gen);
  return full.eta - full.tau * DiffExpr::jet(1, 0) - full.xi * DiffExpr::jet(0, 1);
}

bool check_symmetry(const DiffExpr& P, const NormalPDE& pde) {
  return restrict_to_solutions(frechet(pde.G(), P), pde).is_zero();
}

bool is_self_adjoint(const NormalPDE& pde) {
  const LinDiffOp linearization = frechet_operator(pde.G());
  return linearization == adjoint(linearization);
}

namespace {

// Columns are the coefficient vectors of `exprs` over the union of their
// monomials.
QMatrix coordinate_matrix(const std::vector<DiffExpr>& exprs) {
  std::map<Monomial, std::size_t> row_of;
  for (const DiffExpr& e : exprs)
    for (const auto& [m, c] : e.terms()) row_of.emplace(m, 0);
  std::size_t next = 0;
  for (auto& [m, index] : row_of) index = next++;
  QMatrix out(row_of.size(), exprs.size());
  for (std::size_t j = 0; j < exprs.size(); ++j)
    for (const auto& [m, c] : exprs[j].terms()) out(row_of.at(m), j) = c;
  return out;
}

void require_symmetry(const DiffExpr& P, const NormalPDE& pde) {
  if (!check_symmetry(P, pde))
    throw Error(ErrorKind::NotASymmetry, "G'(P) does not vanish on solutions");
}

void require_multiplier(const DiffExpr& Q, const NormalPDE& pde) {
  if (!check_multiplier(Q, pde))
    throw Error(ErrorKind::NotAMultiplier, "Q G is not a total divergence");
}

}  // namespace

std::vector<DiffExpr> solve_symmetries(const NormalPDE& pde, const Ansatz& ansatz) {
  const std::vector<Monomial> unknowns = ansatz_monomials(ansatz, jets_up_to(ansatz.max_order));
  const DiffExpr& G = pde.G();
  const std::vector<QVector> solutions = solve_linear_conditions(
      unknowns, [&](const DiffExpr& p) { return restrict_to_solutions(frechet(G, p), pde); });

  // Keep a solution only if it is independent of the kept ones on solutions.
  std::vector<DiffExpr> basis;
  std::vector<DiffExpr> restricted;
  for (const QVector& v : solutions) {
    DiffExpr P = combine(unknowns, v);
    restricted.push_back(restrict_to_solutions(P, pde));
    if (rank(coordinate_matrix(restricted)) == restricted.size()) {
      basis.push_back(std::move(P));
    } else {
      restricted.pop_back();
    }
  }
  return basis;
}

ConservedCurrent act_on_current(const SymmetryGen& gen, const ConservedCurrent& cur,
                                const NormalPDE& pde) {
  const DiffExpr P = characteristic(gen);
  require_symmetry(P, pde);
  if (!verify_conservation_law(cur, pde))
    throw Error(ErrorKind::NotConserved, "D_t T + D_x X does not vanish on solutions");

  ConservedCurrent out{frechet(cur.T, P), frechet(cur.X, P)};
  if (const auto* full = std::get_if<FullGenerator>(&gen)) {
    auto total_t = [](const DiffExpr& f) { return total_derivative(f, Coord::t); };
    auto total_x = [](const DiffExpr& f) { return total_derivative(f, Coord::x); };
    out.T += full->tau * total_t(cur.T) + full->xi * total_x(cur.T) + cur.T * total_x(full->xi) -
             cur.X * total_x(full->tau);
    out.X += full->tau * total_t(cur.X) + full->xi * total_x(cur.X) + cur.X * total_t(full->tau) -
             cur.T * total_t(full->xi);
  }
  return out;
}

DiffExpr act_on_multiplier(const DiffExpr& P, const DiffExpr& Q, const NormalPDE& pde) {
  require_symmetry(P, pde);
  require_multiplier(Q, pde);
  const LinDiffOp RP = extract_operator(frechet(pde.G(), P), pde);
  const LinDiffOp RQ = extract_operator(frechet_adjoint(pde.G(), Q), pde);
  return adjoint_operator(RP, Q) - adjoint_operator(RQ, P);
}

ConservedCurrent psi_current(const DiffExpr& P, const DiffExpr& Q, const NormalPDE& pde) {
  require_symmetry(P, pde);
  if (!check_adjoint_symmetry(Q, pde))
    throw Error(ErrorKind::NotAdjointSymmetry, "G'*(Q) does not vanish on solutions");
  return boundary_current(pde.G(), P, Q);
}

ClassificationResult classify(const DiffExpr& P, const DiffExpr& Q, const NormalPDE& pde,
                              Comparison mode) {
  const DiffExpr action = act_on_multiplier(P, Q, pde);
  const DiffExpr on_solutions = restrict_to_solutions(Q, pde);
  if (on_solutions.is_zero())
    throw Error(ErrorKind::TrivialMultiplier, "Q vanishes on solutions");

  const bool restricted = mode == Comparison::OnSolutions;
  ClassificationResult result;
  result.action_multiplier = restricted ? restrict_to_solutions(action, pde) : action;
  const DiffExpr& target = restricted ? on_solutions : Q;

  if (result.action_multiplier.is_zero()) {
    result.verdict = Verdict::Invariant;
    return result;
  }
  const auto& [lead, lead_coeff] = *target.terms().begin();
  result.lambda = result.action_multiplier.coefficient(lead) / lead_coeff;
  result.residual = result.action_multiplier - scale(target, result.lambda);
  if (result.residual.is_zero()) {
    result.verdict = Verdict::Homogeneous;
  } else {
    result.verdict = Verdict::NotHomogeneous;
    result.lambda = 0;
  }
  return result;
}

ActionMatrix action_matrix(const DiffExpr& P, const std::vector<DiffExpr>& basis,
                           const NormalPDE& pde) {
  require_symmetry(P, pde);
  const std::size_t n = basis.size();
  std::vector<DiffExpr> exprs;  // restricted basis, then restricted images
  exprs.reserve(2 * n);
  for (const DiffExpr& Q : basis) {
    require_multiplier(Q, pde);
    exprs.push_back(restrict_to_solutions(Q, pde));
  }
  for (const DiffExpr& Q : basis)
    exprs.push_back(restrict_to_solutions(act_on_multiplier(P, Q, pde), pde));

  const QMatrix coords = coordinate_matrix(exprs);
  QMatrix span(coords.rows(), n);
  for (std::size_t r = 0; r < coords.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) span(r, c) = coords(r, c);
  if (rank(span) != n)
    throw Error(ErrorKind::TrivialMultiplier, "basis is linearly dependent on solutions");

  ActionMatrix result;
  result.matrix = QMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    QVector image(coords.rows());
    for (std::size_t r = 0; r < coords.rows(); ++r) image[r] = coords(r, n + j);
    const std::optional<QVector> solution = solve(span, image);
    if (!solution)
      throw Error(ErrorKind::NotClosed, "the image of basis element " + std::to_string(j) +
                                            " leaves the span; enlarge the ansatz");
    for (std::size_t i = 0; i < n; ++i) result.matrix(i, j) = (*solution)[i];
  }

  const RationalRoots roots = rational_roots(characteristic_polynomial(result.matrix));
  result.unresolved = roots.unresolved;
  for (Eigenpair& pair : rational_eigenpairs(result.matrix)) {
    DiffExpr multiplier;
    for (std::size_t i = 0; i < n; ++i) multiplier += scale(basis[i], pair.vector[i]);
    result.homogeneous.push_back({pair.value, std::move(pair.vector), std::move(multiplier)});
  }
  return result;
}

}  // namespace claws

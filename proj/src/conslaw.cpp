#include "claws/conslaw.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "claws/error.hpp"

namespace claws {

bool verify_conservation_law(const ConservedCurrent& cur, const NormalPDE& pde) {
  return restrict_to_solutions(divergence(cur), pde).is_zero();
}

DiffExpr multiplier_from_current(const ConservedCurrent& cur, const NormalPDE& pde) {
  const DiffExpr div = divergence(cur);
  if (!restrict_to_solutions(div, pde).is_zero())
    throw Error(ErrorKind::NotConserved, "D_t T + D_x X does not vanish on solutions");
  // D_t T + D_x X = R(G); integrating by parts leaves R*(1) G plus a divergence.
  return adjoint_operator(extract_operator(div, pde), DiffExpr(1));
}

bool is_trivial_current(const ConservedCurrent& cur, const NormalPDE& pde) {
  return restrict_to_solutions(multiplier_from_current(cur, pde), pde).is_zero();
}

bool check_multiplier(const DiffExpr& Q, const NormalPDE& pde) {
  return euler(Q * pde.G()).is_zero();
}

bool check_adjoint_symmetry(const DiffExpr& Q, const NormalPDE& pde) {
  return restrict_to_solutions(frechet_adjoint(pde.G(), Q), pde).is_zero();
}

bool helmholtz_check(const DiffExpr& Q, const NormalPDE& pde) {
  const DiffExpr adjoint_image = frechet_adjoint(pde.G(), Q);
  if (!restrict_to_solutions(adjoint_image, pde).is_zero())
    throw Error(ErrorKind::NotAdjointSymmetry, "G'*(Q) does not vanish on solutions");
  const LinDiffOp RQ = extract_operator(adjoint_image, pde);
  return restrict_to_solutions(adjoint(RQ) + frechet_operator(Q), pde).is_zero();
}

ConservedCurrent current_from_multiplier(const DiffExpr& Q, const NormalPDE& pde) {
  const DiffExpr density = Q * pde.G();
  if (!euler(density).is_zero())
    throw Error(ErrorKind::NotAMultiplier, "Q G is not a total divergence");
  return invert_divergence(density);
}

std::vector<JetIndex> jets_up_to(int max_order) {
  std::vector<JetIndex> jets;
  for (int nt = 0; nt <= max_order; ++nt)
    for (int nx = 0; nt + nx <= max_order; ++nx) jets.push_back({nt, nx});
  std::sort(jets.begin(), jets.end());
  return jets;
}

std::vector<Monomial> ansatz_monomials(const Ansatz& ansatz, const std::vector<JetIndex>& jets) {
  if (ansatz.max_order < 0 || ansatz.max_jet_degree < 0 || ansatz.max_t_degree < 0 ||
      ansatz.max_x_degree < 0)
    throw Error(ErrorKind::InvalidAnsatz, "ansatz bounds must be non-negative");

  // Jet parts: multisets of size <= max_jet_degree, built by extending each
  // multiset only with jets not smaller than its last factor.
  std::vector<Monomial> jet_parts{Monomial{}};
  std::vector<std::size_t> last_index{0};
  std::size_t begin = 0;
  for (int degree = 1; degree <= ansatz.max_jet_degree; ++degree) {
    const std::size_t end = jet_parts.size();
    for (std::size_t p = begin; p < end; ++p) {
      for (std::size_t j = last_index[p]; j < jets.size(); ++j) {
        jet_parts.push_back(jet_parts[p] * Monomial{0, 0, {{jets[j], 1}}});
        last_index.push_back(j);
      }
    }
    begin = end;
  }

  std::vector<Monomial> out;
  for (int a = 0; a <= ansatz.max_t_degree; ++a)
    for (int b = 0; b <= ansatz.max_x_degree; ++b)
      for (const Monomial& jp : jet_parts) out.push_back(Monomial{a, b, {}} * jp);
  std::sort(out.begin(), out.end(),
            [](const Monomial& l, const Monomial& r) { return simpler_than(r, l); });
  return out;
}

namespace {

void make_primitive(QVector& v) {
  mpz_class denom_lcm = 1;
  for (const Rational& c : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const Rational& c : v) {
    const mpz_class n = mpz_class(c * denom_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return;
  Rational factor(denom_lcm, num_gcd);
  factor.canonicalize();
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
  if (lead != v.end() && *lead < 0) factor = -factor;
  for (Rational& c : v) c *= factor;
}

}  // namespace

std::vector<QVector> solve_linear_conditions(
    const std::vector<Monomial>& unknowns,
    const std::function<DiffExpr(const DiffExpr&)>& condition) {
  std::vector<DiffExpr> columns;
  columns.reserve(unknowns.size());
  std::map<Monomial, std::size_t> row_of;
  for (const Monomial& m : unknowns) {
    columns.push_back(condition(DiffExpr(m, 1)));
    for (const auto& [rm, c] : columns.back().terms()) row_of.emplace(rm, 0);
  }
  std::size_t next = 0;
  for (auto& [rm, index] : row_of) index = next++;

  QMatrix system(row_of.size(), unknowns.size());
  for (std::size_t col = 0; col < columns.size(); ++col)
    for (const auto& [rm, c] : columns[col].terms()) system(row_of.at(rm), col) = c;

  const std::vector<QVector> kernel = nullspace(system);
  if (kernel.empty()) return {};
  const QMatrix reduced = rref(QMatrix::from_rows(kernel, unknowns.size()));
  std::vector<QVector> basis;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    QVector v = reduced.row(r);
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

DiffExpr combine(const std::vector<Monomial>& unknowns, const std::vector<Rational>& coords) {
  DiffExpr e;
  for (std::size_t i = 0; i < unknowns.size(); ++i) e.add_term(unknowns[i], coords[i]);
  return e;
}

std::vector<DiffExpr> solve_multipliers(const NormalPDE& pde, const Ansatz& ansatz) {
  if (ansatz.max_order >= pde.order())
    throw Error(ErrorKind::InvalidAnsatz,
                "multiplier order " + std::to_string(ansatz.max_order) +
                    " must be below the equation order " + std::to_string(pde.order()));
  std::vector<JetIndex> jets;
  for (JetIndex j : jets_up_to(ansatz.max_order))
    if (!pde.is_consequence(j)) jets.push_back(j);

  const std::vector<Monomial> unknowns = ansatz_monomials(ansatz, jets);
  const DiffExpr& G = pde.G();
  std::vector<DiffExpr> basis;
  for (const QVector& v : solve_linear_conditions(
           unknowns, [&](const DiffExpr& q) { return euler(q * G); }))
    basis.push_back(combine(unknowns, v));
  return basis;
}

}  // namespace claws

#include "claws/diffops.hpp"

#include <algorithm>
#include <vector>

#include "claws/error.hpp"

namespace claws {

ConservedCurrent operator+(const ConservedCurrent& a, const ConservedCurrent& b) {
  return {a.T + b.T, a.X + b.X};
}

ConservedCurrent operator-(const ConservedCurrent& a, const ConservedCurrent& b) {
  return {a.T - b.T, a.X - b.X};
}

ConservedCurrent scale(const ConservedCurrent& cur, const Rational& c) {
  return {scale(cur.T, c), scale(cur.X, c)};
}

DiffExpr total_derivative(const DiffExpr& f, Coord axis) {
  const JetIndex step = axis == Coord::t ? JetIndex{1, 0} : JetIndex{0, 1};
  DiffExpr r;
  for (const auto& [m, c] : f.terms()) {
    const int deg = axis == Coord::t ? m.t_deg : m.x_deg;
    if (deg > 0) {
      Monomial d = m;
      (axis == Coord::t ? d.t_deg : d.x_deg) -= 1;
      r.add_term(d, c * deg);
    }
    for (std::size_t k = 0; k < m.jets.size(); ++k) {
      const auto [jet, e] = m.jets[k];
      Monomial d = m;
      if (e == 1) {
        d.jets.erase(d.jets.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        d.jets[k].second = e - 1;
      }
      r.add_term(d * Monomial{0, 0, {{jet + step, 1}}}, c * e);
    }
  }
  return r;
}

DiffExpr total_derivative(const DiffExpr& f, JetIndex k) {
  DiffExpr r = f;
  for (int i = 0; i < k.nt && !r.is_zero(); ++i) r = total_derivative(r, Coord::t);
  for (int j = 0; j < k.nx && !r.is_zero(); ++j) r = total_derivative(r, Coord::x);
  return r;
}

DiffExpr divergence(const ConservedCurrent& cur) {
  return total_derivative(cur.T, Coord::t) + total_derivative(cur.X, Coord::x);
}

namespace {

// (-D)^k f
DiffExpr signed_total_derivative(const DiffExpr& f, JetIndex k) {
  DiffExpr r = total_derivative(f, k);
  return k.order() % 2 == 0 ? r : -r;
}

}  // namespace

DiffExpr frechet(const DiffExpr& f, const DiffExpr& g) {
  DiffExpr r;
  for (JetIndex jet : jet_variables(f)) r += partial(f, jet) * total_derivative(g, jet);
  return r;
}

DiffExpr frechet_adjoint(const DiffExpr& f, const DiffExpr& h) {
  DiffExpr r;
  for (JetIndex jet : jet_variables(f)) r += signed_total_derivative(h * partial(f, jet), jet);
  return r;
}

DiffExpr euler(const DiffExpr& f) { return frechet_adjoint(f, DiffExpr(1)); }

bool is_divergence(const DiffExpr& f) { return euler(f).is_zero(); }

ConservedCurrent boundary_current(const DiffExpr& f, const DiffExpr& g, const DiffExpr& h) {
  ConservedCurrent psi;
  for (JetIndex jet : jet_variables(f)) {
    // a * D_t^i D_x^j g  =  D_t(a * D_t^{i-1} D_x^j g) - (D_t a) * D_t^{i-1} D_x^j g
    DiffExpr a = h * partial(f, jet);
    for (int i = jet.nt; i > 0; --i) {
      psi.T += a * total_derivative(g, JetIndex{i - 1, jet.nx});
      a = -total_derivative(a, Coord::t);
    }
    for (int j = jet.nx; j > 0; --j) {
      psi.X += a * total_derivative(g, JetIndex{0, j - 1});
      a = -total_derivative(a, Coord::x);
    }
  }
  return psi;
}

ConservedCurrent invert_divergence(const DiffExpr& f) {
  if (!is_divergence(f))
    throw Error(ErrorKind::NotADivergence, "expression is not a total divergence");

  ConservedCurrent result;
  for (const auto& [degree, part] : jet_degree_split(f)) {
    if (degree == 0) {
      for (const auto& [m, c] : part.terms()) {
        Monomial integrated = m;
        integrated.x_deg += 1;
        result.X.add_term(integrated, c / integrated.x_deg);
      }
      continue;
    }
    const Rational weight(1, degree);
    result = result + scale(boundary_current(part, DiffExpr::u(), DiffExpr(1)), weight);
  }
  return result;
}

}  // namespace claws

#pragma once

// Test-only reference evaluator.  A differential expression is checked by
// substituting a concrete polynomial u(t,x) and doing the calculus on plain
// bivariate polynomials, so none of the jet-space machinery under test is
// reused (only `partial`, the coordinate derivative of a monomial).

#include <gmpxx.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "claws/expr.hpp"

namespace oracle {

using claws::DiffExpr;
using claws::JetIndex;
using claws::Monomial;
using claws::Rational;

// t^a x^b -> coefficient
using Poly = std::map<std::pair<int, int>, mpq_class>;

inline void normalize(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Poly add(Poly a, const Poly& b, const mpq_class& s = 1) {
  for (const auto& [k, c] : b) a[k] += s * c;
  normalize(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  normalize(r);
  return r;
}

inline Poly d(const Poly& p, bool wrt_t) {
  Poly r;
  for (const auto& [k, c] : p) {
    const int e = wrt_t ? k.first : k.second;
    if (e == 0) continue;
    r[wrt_t ? std::pair{k.first - 1, k.second} : std::pair{k.first, k.second - 1}] += c * e;
  }
  normalize(r);
  return r;
}

inline Poly d(Poly p, JetIndex j) {
  for (int i = 0; i < j.nt; ++i) p = d(p, true);
  for (int i = 0; i < j.nx; ++i) p = d(p, false);
  return p;
}

inline Poly power(const Poly& p, int e) {
  Poly r{{{0, 0}, 1}};
  for (int i = 0; i < e; ++i) r = mul(r, p);
  return r;
}

/// f evaluated on the function u.
inline Poly eval(const DiffExpr& f, const Poly& u) {
  Poly r;
  for (const auto& [m, c] : f.terms()) {
    Poly term{{{m.t_deg, m.x_deg}, c}};
    for (const auto& [jet, e] : m.jets) term = mul(term, power(d(u, jet), e));
    r = add(r, term);
  }
  return r;
}

inline int sign(JetIndex j) { return j.order() % 2 == 0 ? 1 : -1; }

/// sum_J (d f / d u_J)|_u * d^J (g|_u)
inline Poly frechet_at(const DiffExpr& f, const DiffExpr& g, const Poly& u) {
  Poly r;
  const Poly gu = eval(g, u);
  for (JetIndex j : claws::jet_variables(f))
    r = add(r, mul(eval(claws::partial(f, j), u), d(gu, j)));
  return r;
}

/// sum_J (-d)^J ((h * d f / d u_J)|_u)
inline Poly adjoint_at(const DiffExpr& f, const DiffExpr& h, const Poly& u) {
  Poly r;
  const Poly hu = eval(h, u);
  for (JetIndex j : claws::jet_variables(f))
    r = add(r, d(mul(hu, eval(claws::partial(f, j), u)), j), sign(j));
  return r;
}

inline Poly euler_at(const DiffExpr& f, const Poly& u) { return adjoint_at(f, DiffExpr(1), u); }

/// Random polynomial in t, x with total degree <= deg.
inline Poly random_field(std::mt19937& rng, int deg = 4) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  Poly p;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b) p[{a, b}] = coeff(rng);
  normalize(p);
  return p;
}

/// Random differential polynomial: jets of order <= max_order, jet degree
/// <= max_degree, coefficients in [-9, 9], t/x powers <= 1.
inline DiffExpr random_expr(std::mt19937& rng, int max_order = 3, int max_degree = 3,
                            int terms = 4, bool with_coords = true) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> order(0, max_order);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> coin(0, with_coords ? 1 : 0);
  DiffExpr f;
  for (int k = 0; k < terms; ++k) {
    DiffExpr term(coeff(rng));
    if (coin(rng)) term *= DiffExpr::t();
    if (coin(rng)) term *= DiffExpr::x();
    const int deg = degree(rng);
    for (int i = 0; i < deg; ++i) {
      const int n = order(rng);
      std::uniform_int_distribution<int> split(0, n);
      const int nt = split(rng);
      term *= DiffExpr::jet(nt, n - nt);
    }
    f += term;
  }
  return f;
}

/// Rank over Q by plain Gaussian elimination, independent of the
/// library's linear algebra.
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const mpq_class f = rows[i][c] / rows[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// Rank of a family of expressions viewed as coefficient vectors.
inline std::size_t rank(const std::vector<DiffExpr>& exprs) {
  std::map<Monomial, std::size_t> col;
  for (const DiffExpr& e : exprs)
    for (const auto& [m, c] : e.terms()) col.emplace(m, col.size());
  std::vector<std::vector<mpq_class>> rows(exprs.size(), std::vector<mpq_class>(col.size()));
  for (std::size_t i = 0; i < exprs.size(); ++i)
    for (const auto& [m, c] : exprs[i].terms()) rows[i][col.at(m)] = c;
  return rank(rows);
}

/// True when span(a) == span(b).
inline bool same_span(const std::vector<DiffExpr>& a, const std::vector<DiffExpr>& b) {
  std::vector<DiffExpr> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank(both);
  return r == rank(a) && r == rank(b);
}

}  // namespace oracle

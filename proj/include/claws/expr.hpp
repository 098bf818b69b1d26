#pragma once

// Differential polynomials over Q on the jet space of a scalar u(t, x).
//
// A DiffExpr is a finite sum of rational multiples of monomials
// t^a x^b prod_J u_J^{e_J}, where every jet variable u_J = d_t^{nt} d_x^{nx} u
// is an independent coordinate.  Terms are kept in a sorted map with no zero
// coefficients, so two expressions are equal exactly when their maps are.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace claws {

using Rational = mpq_class;

/// Multi-index (nt, nx) naming the jet u_{t^nt x^nx}; (0,0) is u itself.
/// Ordered by nt first, then nx.
struct JetIndex {
  int nt = 0;
  int nx = 0;

  constexpr int order() const { return nt + nx; }
  constexpr JetIndex operator+(JetIndex other) const { return {nt + other.nt, nx + other.nx}; }
  constexpr JetIndex operator-(JetIndex other) const { return {nt - other.nt, nx - other.nx}; }
  /// Componentwise >=: true when this jet is a derivative of `other`.
  constexpr bool dominates(JetIndex other) const { return nt >= other.nt && nx >= other.nx; }

  auto operator<=>(const JetIndex&) const = default;
};

enum class Coord { t, x };

/// A coordinate of the jet space: one of the independent variables or a jet.
using Variable = std::variant<Coord, JetIndex>;

struct Monomial {
  int t_deg = 0;
  int x_deg = 0;
  /// Strictly increasing in JetIndex, exponents positive.
  std::vector<std::pair<JetIndex, int>> jets;

  int jet_degree() const;
  int exponent(JetIndex jet) const;
  bool is_one() const { return t_deg == 0 && x_deg == 0 && jets.empty(); }

  auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// t_deg + x_deg + sum of e * (1 + order) over the jet factors.
int complexity(const Monomial& m);
/// Ascending complexity, ties broken by the Monomial order.  Used for display
/// and for choosing pivots in ansatz solves.
bool simpler_than(const Monomial& a, const Monomial& b);

class DiffExpr {
 public:
  using Terms = std::map<Monomial, Rational>;

  DiffExpr() = default;
  DiffExpr(const Rational& c);  // NOLINT(google-explicit-constructor)
  DiffExpr(int c);              // NOLINT(google-explicit-constructor)
  DiffExpr(const Monomial& m, const Rational& c);

  static DiffExpr t();
  static DiffExpr x();
  static DiffExpr u() { return jet(0, 0); }
  static DiffExpr jet(JetIndex j);
  static DiffExpr jet(int nt, int nx) { return jet(JetIndex{nt, nx}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of `m`, zero when absent.
  Rational coefficient(const Monomial& m) const;

  DiffExpr& operator+=(const DiffExpr& other);
  DiffExpr& operator-=(const DiffExpr& other);
  DiffExpr& operator*=(const DiffExpr& other);
  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  friend DiffExpr operator+(DiffExpr a, const DiffExpr& b) { return a += b; }
  friend DiffExpr operator-(DiffExpr a, const DiffExpr& b) { return a -= b; }
  friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
  friend DiffExpr operator-(const DiffExpr& a);
  friend bool operator==(const DiffExpr& a, const DiffExpr& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

DiffExpr pow(const DiffExpr& base, unsigned exponent);
DiffExpr scale(const DiffExpr& f, const Rational& c);

/// Ordinary partial derivative, jets treated as independent coordinates.
DiffExpr partial(const DiffExpr& f, Variable v);

/// Homogeneous parts by total jet degree; t and x do not count.
std::map<int, DiffExpr> jet_degree_split(const DiffExpr& f);

/// Largest jet order present, -1 if f has no jet variables.
int max_order(const DiffExpr& f);
bool depends_on(const DiffExpr& f, Variable v);
std::set<JetIndex> jet_variables(const DiffExpr& f);

/// Replaces each listed jet by its image; a ring homomorphism fixing t, x and
/// the jets not in `images`.
DiffExpr substitute(const DiffExpr& f, const std::map<JetIndex, DiffExpr>& images);

/// Coefficients c_k with f = sum_k c_k * u_J^k and no c_k depending on u_J.
std::vector<DiffExpr> coefficients_in(const DiffExpr& f, JetIndex jet);

}  // namespace claws

#pragma once

// Dense exact linear algebra over Q.

#include <optional>
#include <vector>

#include "claws/expr.hpp"

namespace claws {

using QVector = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  QVector row(std::size_t r) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);

/// Reduced row echelon form (Gauss-Jordan).  Pivots are chosen as the
/// nonzero candidate of smallest bit size to slow coefficient growth; the
/// result does not depend on the choice.
QMatrix rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);

/// Basis of {v : M v = 0}, one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
std::vector<QVector> nullspace(const QMatrix& m);

/// Some solution of M v = b, or nullopt if inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Coefficients c_0..c_n of det(lambda I - M), c_n = 1.
std::vector<Rational> characteristic_polynomial(const QMatrix& m);

struct RationalRoots {
  /// Distinct rational roots in increasing order.
  std::vector<Rational> roots;
  /// The monic factor left after dividing out every rational root (with
  /// multiplicity); degree 0 when the polynomial splits over Q.
  std::vector<Rational> unresolved;
};

/// Rational roots of sum_k p[k] lambda^k via the rational root test.
RationalRoots rational_roots(const std::vector<Rational>& p);

struct Eigenpair {
  Rational value;
  QVector vector;
};

/// Every eigenpair with a rational eigenvalue; eigenvectors of one eigenvalue
/// come from nullspace(M - value I).
std::vector<Eigenpair> rational_eigenpairs(const QMatrix& m);

}  // namespace claws

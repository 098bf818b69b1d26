#include "claws/ratlin.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace claws {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
  QMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("dimension mismatch in product");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// In-place Gauss-Jordan; returns the pivot column of each nonzero row.
std::vector<std::size_t> reduce(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      if (best == m.rows() || bit_size(m(i, c)) < bit_size(m(best, c))) best = i;
    }
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));

    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMatrix rref(const QMatrix& m) {
  QMatrix r = m;
  reduce(r);
  return r;
}

std::size_t rank(const QMatrix& m) {
  QMatrix r = m;
  return reduce(r).size();
}

std::vector<QVector> nullspace(const QMatrix& m) {
  QMatrix r = m;
  const std::vector<std::size_t> pivots = reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const std::vector<std::size_t> pivots = reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::vector<Rational> characteristic_polynomial(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const QMatrix amk = m * mk;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

namespace {

Rational evaluate(const std::vector<Rational>& p, const Rational& at) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + *it;
  return acc;
}

// p / (lambda - root), assuming root is a root.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& root) {
  std::vector<Rational> q(p.size() - 1);
  Rational carry;
  for (std::size_t k = p.size() - 1; k > 0; --k) {
    carry = carry * root + p[k];
    q[k - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<mpz_class> divisors{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t count = divisors.size();
    mpz_class power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  return divisors;
}

}  // namespace

RationalRoots rational_roots(const std::vector<Rational>& p_in) {
  std::vector<Rational> p = p_in;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw std::invalid_argument("zero polynomial has no finite root set");

  std::set<Rational> found;
  while (p.size() > 1 && p.front() == 0) {
    found.insert(0);
    p.erase(p.begin());
  }

  if (p.size() > 1) {
    mpz_class denom_lcm = 1;
    for (const Rational& c : p) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class a0 = mpz_class(p.front() * denom_lcm);
    const mpz_class an = mpz_class(p.back() * denom_lcm);
    const std::vector<mpz_class> nums = positive_divisors(a0);
    const std::vector<mpz_class> dens = positive_divisors(an);
    for (const mpz_class& num : nums) {
      for (const mpz_class& den : dens) {
        for (int sign : {1, -1}) {
          if (p.size() <= 1) break;
          Rational candidate(num * sign, den);
          candidate.canonicalize();
          while (p.size() > 1 && evaluate(p, candidate) == 0) {
            found.insert(candidate);
            p = deflate(p, candidate);
          }
        }
      }
    }
  }

  const Rational lead = p.back();
  for (Rational& c : p) c /= lead;
  return {std::vector<Rational>(found.begin(), found.end()), p};
}

std::vector<Eigenpair> rational_eigenpairs(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenpairs of non-square matrix");
  std::vector<Eigenpair> pairs;
  if (m.rows() == 0) return pairs;
  for (const Rational& value : rational_roots(characteristic_polynomial(m)).roots) {
    QMatrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= value;
    for (QVector& v : nullspace(shifted)) pairs.push_back({value, std::move(v)});
  }
  return pairs;
}

}  // namespace claws

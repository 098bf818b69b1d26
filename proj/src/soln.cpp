#include "claws/soln.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <string>

#include "claws/error.hpp"

namespace claws {

struct NormalPDE::ImageCache {
  std::recursive_mutex mutex;
  std::map<JetIndex, DiffExpr> images;
};

namespace {

std::string jet_name(JetIndex j) {
  std::string s = "u";
  if (j.order() > 0) s += "_" + std::string(j.nt, 't') + std::string(j.nx, 'x');
  return s;
}

}  // namespace

NormalPDE::NormalPDE(JetIndex lead, DiffExpr rhs)
    : lead_(lead),
      rhs_(std::move(rhs)),
      G_(DiffExpr::jet(lead) - rhs_),
      cache_(std::make_shared<ImageCache>()) {}

NormalPDE make_pde(JetIndex lead, const DiffExpr& rhs) {
  if (lead.nt < 1 || lead.nx < 0)
    throw Error(ErrorKind::NotNormal,
                "leading derivative " + jet_name(lead) + " must contain a t-derivative");
  for (JetIndex j : jet_variables(rhs)) {
    if (j.dominates(lead))
      throw Error(ErrorKind::NotNormal, "right-hand side contains " + jet_name(j) +
                                            ", a consequence of the leading derivative " +
                                            jet_name(lead));
    const bool ordered = j.nt < lead.nt || (j.nt == lead.nt && j.nx < lead.nx);
    if (!ordered)
      throw Error(ErrorKind::NotNormal, "right-hand side jet " + jet_name(j) +
                                            " has more t-derivatives than " + jet_name(lead) +
                                            "; elimination would not terminate");
  }
  return NormalPDE(lead, rhs);
}

int NormalPDE::order() const { return std::max(lead_.order(), max_order(rhs_)); }

const DiffExpr& NormalPDE::consequence_image(JetIndex k) const {
  std::lock_guard lock(cache_->mutex);
  if (auto it = cache_->images.find(k); it != cache_->images.end()) return it->second;

  // Differentiating an eliminated image can only produce consequence jets that
  // are strictly smaller in the (nt, nx) order, so the recursion terminates.
  DiffExpr image;
  if (k == JetIndex{0, 0}) {
    image = rhs_;
  } else if (k.nt > 0) {
    image = restrict_to_solutions(
        total_derivative(consequence_image({k.nt - 1, k.nx}), Coord::t), *this);
  } else {
    image = restrict_to_solutions(
        total_derivative(consequence_image({0, k.nx - 1}), Coord::x), *this);
  }
  return cache_->images.emplace(k, std::move(image)).first->second;
}

DiffExpr restrict_to_solutions(const DiffExpr& f, const NormalPDE& pde) {
  std::map<JetIndex, DiffExpr> images;
  for (JetIndex j : jet_variables(f))
    if (pde.is_consequence(j)) images.emplace(j, pde.consequence_image(j - pde.lead()));
  return substitute(f, images);
}

void LinDiffOp::add(JetIndex k, const DiffExpr& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

LinDiffOp operator+(const LinDiffOp& a, const LinDiffOp& b) {
  LinDiffOp r = a;
  for (const auto& [k, c] : b.coeffs) r.add(k, c);
  return r;
}

LinDiffOp operator-(const LinDiffOp& a, const LinDiffOp& b) {
  LinDiffOp r = a;
  for (const auto& [k, c] : b.coeffs) r.add(k, -c);
  return r;
}

DiffExpr apply_operator(const LinDiffOp& R, const DiffExpr& f) {
  DiffExpr r;
  for (const auto& [k, c] : R.coeffs) r += c * total_derivative(f, k);
  return r;
}

DiffExpr adjoint_operator(const LinDiffOp& R, const DiffExpr& f) {
  DiffExpr r;
  for (const auto& [k, c] : R.coeffs) {
    DiffExpr term = total_derivative(c * f, k);
    if (k.order() % 2 == 0) {
      r += term;
    } else {
      r -= term;
    }
  }
  return r;
}

namespace {

Rational binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace

LinDiffOp adjoint(const LinDiffOp& R) {
  // (-D)^k (c phi) = (-1)^|k| sum_{m <= k} C(k, m) D^{k-m} c  D^m phi
  LinDiffOp out;
  for (const auto& [k, c] : R.coeffs) {
    const Rational sign = k.order() % 2 == 0 ? 1 : -1;
    for (int mt = 0; mt <= k.nt; ++mt) {
      for (int mx = 0; mx <= k.nx; ++mx) {
        const Rational weight = sign * binomial(k.nt, mt) * binomial(k.nx, mx);
        out.add({mt, mx}, scale(total_derivative(c, JetIndex{k.nt - mt, k.nx - mx}), weight));
      }
    }
  }
  return out;
}

LinDiffOp frechet_operator(const DiffExpr& f) {
  LinDiffOp op;
  for (JetIndex j : jet_variables(f)) op.add(j, partial(f, j));
  return op;
}

LinDiffOp restrict_to_solutions(const LinDiffOp& R, const NormalPDE& pde) {
  LinDiffOp out;
  for (const auto& [k, c] : R.coeffs) out.add(k, restrict_to_solutions(c, pde));
  return out;
}

LinDiffOp extract_operator(const DiffExpr& f, const NormalPDE& pde) {
  LinDiffOp R;
  DiffExpr rest = f;
  for (;;) {
    std::optional<JetIndex> highest;
    for (JetIndex j : jet_variables(rest))
      if (pde.is_consequence(j)) highest = j;  // jet_variables is sorted
    if (!highest) break;

    const JetIndex k = *highest - pde.lead();
    const DiffExpr v = DiffExpr::jet(*highest);
    const DiffExpr w = total_derivative(pde.rhs(), k);
    const std::vector<DiffExpr> c = coefficients_in(rest, *highest);

    // q = sum_e c_e (v^e - w^e) / (v - w)
    DiffExpr q;
    DiffExpr substituted = c.empty() ? DiffExpr() : c[0];
    std::vector<DiffExpr> v_pow{DiffExpr(1)};
    std::vector<DiffExpr> w_pow{DiffExpr(1)};
    for (std::size_t e = 1; e < c.size(); ++e) {
      v_pow.push_back(v_pow.back() * v);
      w_pow.push_back(w_pow.back() * w);
      if (c[e].is_zero()) continue;
      DiffExpr quotient;
      for (std::size_t m = 0; m < e; ++m) quotient += v_pow[e - 1 - m] * w_pow[m];
      q += c[e] * quotient;
      substituted += c[e] * w_pow[e];
    }
    R.add(k, q);
    rest = std::move(substituted);
  }
  if (!rest.is_zero())
    throw Error(ErrorKind::NotOnSolutionSpace,
                "expression does not vanish on the solution space of the equation");
  return R;
}

}  // namespace claws

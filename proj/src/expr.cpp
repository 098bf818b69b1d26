#include "claws/expr.hpp"

#include <algorithm>

namespace claws {

int Monomial::jet_degree() const {
  int d = 0;
  for (const auto& [jet, e] : jets) d += e;
  return d;
}

int Monomial::exponent(JetIndex jet) const {
  auto it = std::lower_bound(jets.begin(), jets.end(), jet,
                             [](const auto& p, JetIndex j) { return p.first < j; });
  return (it != jets.end() && it->first == jet) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.t_deg = a.t_deg + b.t_deg;
  m.x_deg = a.x_deg + b.x_deg;
  m.jets.reserve(a.jets.size() + b.jets.size());
  auto i = a.jets.begin();
  auto j = b.jets.begin();
  while (i != a.jets.end() && j != b.jets.end()) {
    if (i->first < j->first) {
      m.jets.push_back(*i++);
    } else if (j->first < i->first) {
      m.jets.push_back(*j++);
    } else {
      m.jets.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.jets.insert(m.jets.end(), i, a.jets.end());
  m.jets.insert(m.jets.end(), j, b.jets.end());
  return m;
}

int complexity(const Monomial& m) {
  int w = m.t_deg + m.x_deg;
  for (const auto& [jet, e] : m.jets) w += e * (1 + jet.order());
  return w;
}

bool simpler_than(const Monomial& a, const Monomial& b) {
  const int ca = complexity(a);
  const int cb = complexity(b);
  return ca != cb ? ca < cb : a < b;
}

DiffExpr::DiffExpr(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

DiffExpr::DiffExpr(int c) : DiffExpr(Rational(c)) {}

DiffExpr::DiffExpr(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

DiffExpr DiffExpr::t() { return DiffExpr(Monomial{1, 0, {}}, 1); }

DiffExpr DiffExpr::x() { return DiffExpr(Monomial{0, 1, {}}, 1); }

DiffExpr DiffExpr::jet(JetIndex j) { return DiffExpr(Monomial{0, 0, {{j, 1}}}, 1); }

bool DiffExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational DiffExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffExpr& DiffExpr::operator+=(const DiffExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

DiffExpr& DiffExpr::operator-=(const DiffExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

DiffExpr& DiffExpr::operator*=(const DiffExpr& other) {
  *this = *this * other;
  return *this;
}

DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) {
  DiffExpr r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

DiffExpr operator-(const DiffExpr& a) {
  DiffExpr r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffExpr pow(const DiffExpr& base, unsigned exponent) {
  DiffExpr result(1);
  DiffExpr b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

DiffExpr scale(const DiffExpr& f, const Rational& c) {
  DiffExpr r;
  if (c == 0) return r;
  for (const auto& [m, coeff] : f.terms()) r.add_term(m, coeff * c);
  return r;
}

DiffExpr partial(const DiffExpr& f, Variable v) {
  DiffExpr r;
  if (const auto* coord = std::get_if<Coord>(&v)) {
    for (const auto& [m, c] : f.terms()) {
      int deg = *coord == Coord::t ? m.t_deg : m.x_deg;
      if (deg == 0) continue;
      Monomial d = m;
      (*coord == Coord::t ? d.t_deg : d.x_deg) -= 1;
      r.add_term(d, c * deg);
    }
    return r;
  }
  const JetIndex jet = std::get<JetIndex>(v);
  for (const auto& [m, c] : f.terms()) {
    auto it = std::find_if(m.jets.begin(), m.jets.end(),
                           [&](const auto& p) { return p.first == jet; });
    if (it == m.jets.end()) continue;
    Monomial d = m;
    auto dit = d.jets.begin() + (it - m.jets.begin());
    const int e = dit->second;
    if (e == 1) {
      d.jets.erase(dit);
    } else {
      dit->second = e - 1;
    }
    r.add_term(d, c * e);
  }
  return r;
}

std::map<int, DiffExpr> jet_degree_split(const DiffExpr& f) {
  std::map<int, DiffExpr> parts;
  for (const auto& [m, c] : f.terms()) parts[m.jet_degree()].add_term(m, c);
  return parts;
}

int max_order(const DiffExpr& f) {
  int order = -1;
  for (const auto& [m, c] : f.terms())
    for (const auto& [jet, e] : m.jets) order = std::max(order, jet.order());
  return order;
}

bool depends_on(const DiffExpr& f, Variable v) {
  for (const auto& [m, c] : f.terms()) {
    if (const auto* coord = std::get_if<Coord>(&v)) {
      if ((*coord == Coord::t ? m.t_deg : m.x_deg) > 0) return true;
    } else if (m.exponent(std::get<JetIndex>(v)) > 0) {
      return true;
    }
  }
  return false;
}

std::set<JetIndex> jet_variables(const DiffExpr& f) {
  std::set<JetIndex> out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [jet, e] : m.jets) out.insert(jet);
  return out;
}

DiffExpr substitute(const DiffExpr& f, const std::map<JetIndex, DiffExpr>& images) {
  if (images.empty()) return f;
  // powers[jet][k] caches image^k
  std::map<JetIndex, std::vector<DiffExpr>> powers;
  auto power_of = [&](JetIndex jet, const DiffExpr& image, int k) -> const DiffExpr& {
    auto& cache = powers[jet];
    if (cache.empty()) cache.emplace_back(1);
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * image);
    return cache[k];
  };

  DiffExpr result;
  for (const auto& [m, c] : f.terms()) {
    Monomial kept{m.t_deg, m.x_deg, {}};
    DiffExpr factor(1);
    for (const auto& [jet, e] : m.jets) {
      auto it = images.find(jet);
      if (it == images.end()) {
        kept.jets.emplace_back(jet, e);
      } else {
        factor *= power_of(jet, it->second, e);
      }
    }
    for (const auto& [fm, fc] : factor.terms()) result.add_term(fm * kept, fc * c);
  }
  return result;
}

std::vector<DiffExpr> coefficients_in(const DiffExpr& f, JetIndex jet) {
  std::vector<DiffExpr> coeffs;
  for (const auto& [m, c] : f.terms()) {
    int e = 0;
    Monomial rest = m;
    auto it = std::find_if(rest.jets.begin(), rest.jets.end(),
                           [&](const auto& p) { return p.first == jet; });
    if (it != rest.jets.end()) {
      e = it->second;
      rest.jets.erase(it);
    }
    if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1);
    coeffs[e].add_term(rest, c);
  }
  return coeffs;
}

}  // namespace claws

#include "claws/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "claws/error.hpp"

namespace claws {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::map<std::string, DiffExpr>& names)
      : text_(text), names_(names) {}

  DiffExpr parse() {
    DiffExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  DiffExpr expr() {
    DiffExpr e = term();
    for (;;) {
      if (accept('+')) {
        e += term();
      } else if (accept('-')) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  DiffExpr term() {
    DiffExpr e = unary();
    for (;;) {
      if (accept('*')) {
        e *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const DiffExpr d = unary();
        if (!d.is_constant())
          throw Error(ErrorKind::NonPolynomial,
                      "at offset " + std::to_string(at) + ": division by a non-constant");
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        e = scale(e, 1 / d.terms().begin()->second);
      } else {
        return e;
      }
    }
  }

  DiffExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  DiffExpr power() {
    DiffExpr base = atom();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-')
      throw Error(ErrorKind::NonPolynomial,
                  "at offset " + std::to_string(pos_) + ": negative exponent");
    const mpz_class n = integer();
    if (n > 1000) fail("exponent too large");
    return pow(base, static_cast<unsigned>(n.get_ui()));
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  DiffExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return DiffExpr(Rational(integer()));
    if (c == '(') {
      ++pos_;
      DiffExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  DiffExpr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string word(text_.substr(start, pos_ - start));
    if (word == "t") return DiffExpr::t();
    if (word == "x") return DiffExpr::x();
    if (word == "u") {
      if (pos_ < text_.size() && text_[pos_] == '[') {
        ++pos_;
        const mpz_class nt = integer();
        expect(',');
        const mpz_class nx = integer();
        expect(']');
        if (nt > 64 || nx > 64) fail("jet order too large");
        return DiffExpr::jet(static_cast<int>(nt.get_si()), static_cast<int>(nx.get_si()));
      }
      return DiffExpr::u();
    }
    if (word.size() > 2 && word.compare(0, 2, "u_") == 0) {
      JetIndex jet;
      for (char letter : word.substr(2)) {
        if (letter == 't') {
          ++jet.nt;
        } else if (letter == 'x') {
          ++jet.nx;
        } else {
          pos_ = start;
          fail("bad jet variable '" + word + "'");
        }
      }
      return DiffExpr::jet(jet);
    }
    if (auto it = names_.find(word); it != names_.end()) return it->second;
    pos_ = start;
    fail("unknown identifier '" + word + "'");
  }

  std::string_view text_;
  const std::map<std::string, DiffExpr>& names_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::vector<std::string> factors;
  auto with_power = [](std::string base, int e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
  };
  if (m.t_deg > 0) factors.push_back(with_power("t", m.t_deg));
  if (m.x_deg > 0) factors.push_back(with_power("x", m.x_deg));
  for (const auto& [jet, e] : m.jets) factors.push_back(with_power(jet_name(jet), e));
  std::string out;
  for (const std::string& f : factors) out += (out.empty() ? "" : "*") + f;
  return out;
}

}  // namespace

DiffExpr parse_expr(std::string_view text, const std::map<std::string, DiffExpr>& names) {
  return Parser(text, names).parse();
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string jet_name(JetIndex jet) {
  if (jet.order() == 0) return "u";
  return "u_" + std::string(jet.nt, 't') + std::string(jet.nx, 'x');
}

std::string to_string(const DiffExpr& e) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(e.terms().begin(), e.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return simpler_than(a.first, b.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial_text(m);
    } else {
      out += to_string(magnitude) + "*" + monomial_text(m);
    }
  }
  return out;
}

}  // namespace claws

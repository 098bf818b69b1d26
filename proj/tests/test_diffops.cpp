#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "claws/diffops.hpp"
#include "claws/error.hpp"
#include "oracle.hpp"

using namespace claws;

namespace {

const DiffExpr u = DiffExpr::u();
const DiffExpr t = DiffExpr::t();
const DiffExpr x = DiffExpr::x();
const DiffExpr ut = DiffExpr::jet(1, 0);
const DiffExpr ux = DiffExpr::jet(0, 1);
const DiffExpr utx = DiffExpr::jet(1, 1);
const DiffExpr uxx = DiffExpr::jet(0, 2);
const DiffExpr uxxx = DiffExpr::jet(0, 3);
const DiffExpr uxxxx = DiffExpr::jet(0, 4);
const DiffExpr kdv = ut + u * ux + uxxx;
const DiffExpr heat = ut - uxx;

DiffExpr Dt(const DiffExpr& f) { return total_derivative(f, Coord::t); }
DiffExpr Dx(const DiffExpr& f) { return total_derivative(f, Coord::x); }

bool round_trips(const DiffExpr& f) { return divergence(invert_divergence(f)) == f; }

}  // namespace

TEST_CASE("total derivatives") {
  CHECK(Dt(u) == ut);
  CHECK(Dx(u * ux) == ux * ux + u * uxx);
  CHECK(Dt(t * ux) == ux + t * utx);
  CHECK(Dx(x * x) == DiffExpr(2) * x);
  CHECK(total_derivative(u, JetIndex{1, 2}) == DiffExpr::jet(1, 2));
}

TEST_CASE("frechet derivative") {
  const DiffExpr g = DiffExpr::jet(0, 1) * t + u * u;
  CHECK(frechet(u, g) == g);
  CHECK(frechet(ux * ux, g) == DiffExpr(2) * ux * Dx(g));
  // G'(-u_x) on KdV is -D_x G.
  CHECK(frechet(kdv, -ux) == -utx - ux * ux - u * uxx - uxxxx);
  CHECK(frechet(kdv, -ux) == -Dx(kdv));
}

TEST_CASE("frechet adjoint and euler") {
  const DiffExpr h = x * u + 1;
  CHECK(frechet_adjoint(u, h) == h);
  CHECK(frechet_adjoint(kdv, u) == -kdv);
  CHECK(frechet_adjoint(heat, 1).is_zero());
  CHECK(euler(ux * ux) == DiffExpr(-2) * uxx);
  CHECK(euler(Dx(u * u * ux)).is_zero());
  CHECK(euler(ut * ux) == DiffExpr(-2) * utx);
}

TEST_CASE("divergence test") {
  CHECK(is_divergence(u * ut));
  CHECK_FALSE(is_divergence(ux * ux));
  CHECK(is_divergence(kdv));
  CHECK(is_divergence(t * x));
}

TEST_CASE("boundary current") {
  const DiffExpr g = u * u + t * ux;
  const DiffExpr h = x * uxx - 3;
  CHECK(boundary_current(ux, g, h) == ConservedCurrent{DiffExpr(), h * g});
  CHECK(boundary_current(ut, g, h) == ConservedCurrent{h * g, DiffExpr()});
  CHECK(boundary_current(uxx, g, h) == ConservedCurrent{DiffExpr(), h * Dx(g) - g * Dx(h)});
}

TEST_CASE("divergence inversion") {
  const ConservedCurrent a = invert_divergence(u * ut);
  CHECK(divergence(a) == u * ut);
  CHECK(a == ConservedCurrent{scale(u * u, Rational(1, 2)), DiffExpr()});

  // Mass law of KdV: (u, u^2/2 + u_xx) up to a trivial current.
  const ConservedCurrent mass = invert_divergence(kdv);
  CHECK(divergence(mass) == kdv);
  const ConservedCurrent expected{u, scale(u * u, Rational(1, 2)) + uxx};
  CHECK(euler(divergence(mass - expected)).is_zero());
  CHECK(mass.T == u);

  CHECK(invert_divergence(DiffExpr(3) * x * x + t) == ConservedCurrent{DiffExpr(), x * x * x + t * x});
  CHECK_THROWS_AS(invert_divergence(ux * ux), Error);
  try {
    invert_divergence(ux * ux);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotADivergence);
  }
}

TEST_CASE("property: operators agree with evaluation on concrete fields") {
  std::mt19937 rng(21);
  for (int i = 0; i < 40; ++i) {
    const DiffExpr f = oracle::random_expr(rng);
    const DiffExpr g = oracle::random_expr(rng, 2, 2, 3);
    const DiffExpr h = oracle::random_expr(rng, 2, 2, 3);
    const oracle::Poly field = oracle::random_field(rng);
    CHECK(oracle::eval(Dt(f), field) == oracle::d(oracle::eval(f, field), true));
    CHECK(oracle::eval(Dx(f), field) == oracle::d(oracle::eval(f, field), false));
    CHECK(oracle::eval(frechet(f, g), field) == oracle::frechet_at(f, g, field));
    CHECK(oracle::eval(frechet_adjoint(f, h), field) == oracle::adjoint_at(f, h, field));
    CHECK(oracle::eval(euler(f), field) == oracle::euler_at(f, field));
  }
}

TEST_CASE("property: euler annihilates total derivatives") {
  std::mt19937 rng(22);
  for (int i = 0; i < 50; ++i) {
    const DiffExpr f = oracle::random_expr(rng);
    CHECK(euler(Dt(f)).is_zero());
    CHECK(euler(Dx(f)).is_zero());
  }
}

TEST_CASE("property: frechet identity and boundary current exactness") {
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    const DiffExpr f = oracle::random_expr(rng);
    const DiffExpr g = oracle::random_expr(rng, 2, 2, 3);
    const DiffExpr h = oracle::random_expr(rng, 2, 2, 3);
    const DiffExpr pairing = h * frechet(f, g) - g * frechet_adjoint(f, h);
    CHECK(euler(pairing).is_zero());
    CHECK(divergence(boundary_current(f, g, h)) == pairing);
  }
}

TEST_CASE("property: second adjoint pairs back") {
  std::mt19937 rng(25);
  for (int i = 0; i < 25; ++i) {
    const DiffExpr f = oracle::random_expr(rng, 2, 2, 3);
    const DiffExpr g = oracle::random_expr(rng, 2, 2, 2);
    const DiffExpr h = oracle::random_expr(rng, 2, 2, 2);
    // f'*(h) f'(g) - g f'*(f'*(h)) is a divergence.
    const DiffExpr adj = frechet_adjoint(f, h);
    CHECK(euler(adj * frechet(f, g) - g * frechet_adjoint(f, adj)).is_zero());
  }
}

TEST_CASE("property: divergence inversion round trip") {
  std::mt19937 rng(24);
  for (int i = 0; i < 40; ++i) {
    const DiffExpr a = oracle::random_expr(rng);
    const DiffExpr b = oracle::random_expr(rng);
    const DiffExpr f = Dt(a) + Dx(b);
    CHECK(round_trips(f));
    CHECK(round_trips(f + DiffExpr(5) * t * x * x));
  }
}

#include <doctest.h>

#include <cmath>

#include "orbitkit/polynomial.hpp"
#include "orbitkit/rng.hpp"
#include "orbitkit/smooth_map.hpp"
#include "oracles.hpp"

using namespace orbitkit;

namespace {

Vec v1(double a) {
  Vec v(1);
  v << a;
  return v;
}

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

} // namespace

TEST_CASE("polynomial evaluation") {
  const Polynomial sq(1, {Term{1.0, {2}}});
  CHECK(sq(v1(3)) == 9.0);

  // (x, y) -> (-y, x)
  const SmoothMap rot = SmoothMap::polynomial(
      {Polynomial(2, {Term{-1.0, {0, 1}}}), Polynomial(2, {Term{1.0, {1, 0}}})});
  const Vec out = rot(v2(1, 0));
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 1.0);

  const Polynomial zero(1);
  CHECK(zero(v1(17.5)) == 0.0);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
}

TEST_CASE("polynomial jacobians are exact") {
  const SmoothMap sq = SmoothMap::scalar(Polynomial(1, {Term{1.0, {2}}}));
  CHECK(sq.jacobian(v1(3))(0, 0) == 6.0);

  const SmoothMap rot = SmoothMap::polynomial(
      {Polynomial(2, {Term{-1.0, {0, 1}}}), Polynomial(2, {Term{1.0, {1, 0}}})});
  const Mat J = rot.jacobian(v2(0.3, -2.0));
  CHECK(J(0, 0) == 0.0);
  CHECK(J(0, 1) == -1.0);
  CHECK(J(1, 0) == 1.0);
  CHECK(J(1, 1) == 0.0);

  const SmoothMap rho = SmoothMap::scalar(Polynomial(2, {Term{1.0, {2, 0}}, Term{1.0, {0, 2}}}));
  const Mat G = rho.jacobian(v2(1, 2));
  CHECK(G(0, 0) == 2.0);
  CHECK(G(0, 1) == 4.0);
}

TEST_CASE("central differences agree with exact jacobians") {
  Rng rng(7);
  for (int round = 0; round < 20; ++round) {
    const Polynomial p = oracles::random_int_poly(rng, 2, 3);
    const SmoothMap exact = SmoothMap::scalar(p);
    const SmoothMap fd = SmoothMap::blackbox(2, 1, [p](const Vec& x) {
      Vec y(1);
      y << p(x);
      return y;
    });
    const Vec x = v2(rng.real(-2, 2), rng.real(-2, 2));
    const Mat Je = exact.jacobian(x);
    const Mat Jf = fd.jacobian(x);
    const double scale = std::max(1.0, Je.cwiseAbs().maxCoeff());
    CHECK((Je - Jf).cwiseAbs().maxCoeff() / scale <= 1e-6);
  }
}

TEST_CASE("substitution composes polynomials") {
  // phi(x, u) = u * x with u = 2 gives 2x.
  const Polynomial phi(2, {Term{1.0, {1, 1}}});
  const Polynomial sub = phi.substitute({Polynomial::variable(1, 0), Polynomial::constant(1, 2.0)});
  CHECK(sub.same_terms(Polynomial(1, {Term{2.0, {1}}})));

  // (x + 1)^2 expanded through substitution into s^2.
  const Polynomial t(1, {Term{1.0, {2}}});
  const Polynomial xp1(1, {Term{1.0, {1}}, Term{1.0, {0}}});
  const Polynomial expanded = t.substitute({xp1});
  CHECK(expanded.same_terms(Polynomial(1, {Term{1.0, {2}}, Term{2.0, {1}}, Term{1.0, {0}}})));
}

TEST_CASE("canonical form merges and prunes") {
  const Polynomial p(1, {Term{1.0, {1}}, Term{2.0, {1}}, Term{1e-15, {3}}});
  CHECK(p.terms().size() == 2);
  CHECK(p.pruned(1e-12).terms().size() == 1);
  CHECK(p.pruned(1e-12).terms()[0].coeff == 3.0);
}

TEST_CASE("dimension mismatches are rejected") {
  const Polynomial sq(1, {Term{1.0, {2}}});
  CHECK_THROWS_AS(sq(v2(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial(1, {Term{1.0, {1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial(2, {Term{1.0, {-1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(SmoothMap::polynomial({}), std::invalid_argument);
  const SmoothMap bb = SmoothMap::blackbox(2, 1, [](const Vec& x) { return v1(x[0]); });
  CHECK_THROWS_AS(bb.outputs(), std::logic_error);
}

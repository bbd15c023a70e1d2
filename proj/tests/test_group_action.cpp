#include <doctest.h>

#include <cmath>

#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"
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

TEST_CASE("finite groups are validated at construction") {
  CHECK_NOTHROW(GroupAction::finite({Mat::Identity(1, 1), -Mat::Identity(1, 1)}));
  // Missing identity.
  CHECK_THROWS_AS(GroupAction::finite({-Mat::Identity(1, 1)}), std::invalid_argument);
  // Not closed: {I, 2I}.
  CHECK_THROWS_AS(GroupAction::finite({Mat::Identity(1, 1), 2 * Mat::Identity(1, 1)}),
                  std::invalid_argument);
}

TEST_CASE("one-parameter rotation group") {
  Mat gen(2, 2);
  gen << 0, -1, 1, 0;
  const GroupAction so2 = GroupAction::one_parameter(gen);
  CHECK((so2.element(0.0) - Mat::Identity(2, 2)).norm() <= 1e-12);
  CHECK((so2.element(M_PI / 2) - oracles::rotation2(M_PI / 2)).norm() <= 1e-12);
  CHECK((so2.element(0.4) * so2.element(0.6) - so2.element(1.0)).norm() <= 1e-12);
  CHECK(so2.sample_elements().size() == 8);
  CHECK(so2.sample_params().size() == 8);
}

TEST_CASE("freeness detection") {
  const auto [z2, z2inv] = catalog_action("z2-line");
  CHECK(z2.is_free_at(v1(1)));
  CHECK(!z2.is_free_at(v1(0)));
  const auto [so2, so2inv] = catalog_action("so2-plane");
  CHECK(so2.is_free_at(v2(1, 0)));
  CHECK(!so2.is_free_at(v2(0, 0)));
}

TEST_CASE("catalog pairs validate and hit their models") {
  // z2-line at x = 2: rho = 4, in [0, inf).
  const auto [z2, z2inv] = catalog_action("z2-line");
  CHECK(z2inv.rho()(v1(2))[0] == 4.0);
  CHECK(z2inv.image().model.contains(z2inv.rho()(v1(2))));

  // z2-plane at (1, 2): rho = (1, 2, 4) satisfies the cone relation exactly.
  const auto [z2p, z2pinv] = catalog_action("z2-plane");
  const Vec r = z2pinv.rho()(v2(1, 2));
  CHECK(r[0] == 1.0);
  CHECK(r[1] == 2.0);
  CHECK(r[2] == 4.0);
  CHECK(r[0] * r[2] - r[1] * r[1] == 0.0);
  CHECK(z2pinv.image().model.contains(r));

  // so2-plane identifies the rotation orbit through (1,0) and (0,1).
  const auto [so2, so2inv] = catalog_action("so2-plane");
  CHECK(so2inv.rho()(v2(1, 0))[0] == so2inv.rho()(v2(0, 1))[0]);

  CHECK_THROWS_AS(catalog_action("nope"), InputError);
}

TEST_CASE("catalog invariant maps separate sampled orbits") {
  // If rho(x) == rho(x') then x' lies on the (brute force) orbit of x.
  const auto [z2, z2inv] = catalog_action("z2-line");
  std::vector<Vec> grid;
  for (double a = -2.0; a <= 2.0; a += 0.25) grid.push_back(v1(a));
  for (const auto& x : grid)
    for (const auto& y : grid) {
      if ((z2inv.rho()(x) - z2inv.rho()(y)).norm() > 1e-9) continue;
      double orbit_dist = 1e300;
      for (const auto& g : z2.elements()) orbit_dist = std::min(orbit_dist, (g * x - y).norm());
      CHECK(orbit_dist <= 1e-6);
    }

  const auto [so2, so2inv] = catalog_action("so2-plane");
  std::vector<Vec> pts{v2(1, 0), v2(0, 1), v2(-1, 0), v2(0.6, 0.8), v2(0.5, 0.5), v2(2, 0)};
  // Brute-force grid over the rotation angle, refined in stages until the
  // grid resolution stops limiting the answer.
  auto orbit_distance = [](const Vec& x, const Vec& y) {
    double center = 0.0, span = 2 * M_PI, best = 1e300, best_th = 0.0;
    for (int stage = 0; stage < 4; ++stage) {
      for (int k = 0; k <= 512; ++k) {
        const double th = center - span / 2 + span * k / 512.0;
        const double d = (oracles::rotation2(th) * x - y).norm();
        if (d < best) {
          best = d;
          best_th = th;
        }
      }
      center = best_th;
      span = 2 * span / 512.0;
    }
    return best;
  };
  for (const auto& x : pts)
    for (const auto& y : pts) {
      if ((so2inv.rho()(x) - so2inv.rho()(y)).norm() > 1e-9) continue;
      CHECK(orbit_distance(x, y) <= 1e-6);
    }
}

TEST_CASE("invariance residual flags non-invariant maps") {
  const auto [z2, ignored] = catalog_action("z2-line");
  // rho = x is not Z2-invariant.
  const InvariantMap bad(SmoothMap::scalar(Polynomial::variable(1, 0)), z2,
                         QuotientModel{SubsetModel::full_space(1)});
  CHECK(bad.invariance_residual({v1(1)}) == 2.0);
  CHECK_THROWS_AS(bad.validate({v1(1)}), std::invalid_argument);
}

// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "rrhmux/deployment.hpp"

using namespace rrhmux;

TEST_CASE("place_random basics") {
  const Torus t{12.0};
  Rng rng = Rng::substream(1, Stream::user_placement, 0, 0);
  CHECK(place_random(t, 0, rng).empty());

  Rng r1 = Rng::substream(5, Stream::rrh_placement, 64, 2);
  Rng r2 = Rng::substream(5, Stream::rrh_placement, 64, 2);
  const auto a = place_random(t, 64, r1);
  const auto b = place_random(t, 64, r2);
  REQUIRE(a.size() == 64);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);  // bitwise reproducible
    CHECK(a[i].y == b[i].y);
    CHECK(a[i].x >= 0.0);
    CHECK(a[i].x < t.side);
    CHECK(a[i].y >= 0.0);
    CHECK(a[i].y < t.side);
  }
}

TEST_CASE("place_random is uniform in the mean") {
  const Torus t{10.0};
  Rng rng(77);
  const std::size_t n = 100000;
  const auto pts = place_random(t, n, rng);
  double sx = 0.0, sy = 0.0;
  for (const auto& p : pts) {
    sx += p.x;
    sy += p.y;
  }
  const double se = t.side / std::sqrt(12.0 * n);
  CHECK(std::abs(sx / n - 5.0) < 3.0 * se);
  CHECK(std::abs(sy / n - 5.0) < 3.0 * se);
}

TEST_CASE("lattice c=1 beta=2: exact coordinates") {
  const auto [torus, pts] = place_lattice(LatticeSpec{1, 2.0}, 2.0);
  // spacing a = d/sqrt(beta) = sqrt(2), side = c*a
  CHECK(torus.side == doctest::Approx(1.4142135623730949).epsilon(1e-15));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].x == doctest::Approx(0.0));
  CHECK(pts[0].y == doctest::Approx(0.0));
  CHECK(pts[1].x == doctest::Approx(0.70710678118654746).epsilon(1e-15));
  CHECK(pts[1].y == doctest::Approx(0.70710678118654746).epsilon(1e-15));
}

TEST_CASE("lattice has 2c^2 distinct points inside the torus") {
  for (int c : {1, 2, 3, 5}) {
    const auto [torus, pts] = place_lattice(LatticeSpec{c, 1.3}, 2.0);
    CHECK(pts.size() == static_cast<std::size_t>(2 * c * c));
    std::set<std::pair<double, double>> uniq;
    for (const auto& p : pts) {
      CHECK(p.x >= 0.0);
      CHECK(p.x < torus.side);
      CHECK(p.y >= 0.0);
      CHECK(p.y < torus.side);
      uniq.emplace(p.x, p.y);
    }
    CHECK(uniq.size() == pts.size());
  }
}

TEST_CASE("lattice nearest-neighbour distance is a/sqrt(2)") {
  for (double beta : {0.5, 1.0, 1.3, 2.0}) {
    const double d = 2.0;
    const auto [torus, pts] = place_lattice(LatticeSpec{3, beta}, d);
    double nn = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        nn = std::min(nn, torus_distance(torus, pts[i], pts[j]));
    const double a = d / std::sqrt(beta);
    CHECK(nn == doctest::Approx(a / std::sqrt(2.0)).epsilon(1e-12));
  }
  // frozen spot value: beta = 1.3, d = 2
  const auto [torus, pts] = place_lattice(LatticeSpec{3, 1.3}, 2.0);
  double nn = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      nn = std::min(nn, torus_distance(torus, pts[i], pts[j]));
  CHECK(nn == doctest::Approx(1.2403473458920846).epsilon(1e-12));
}

TEST_CASE("lattice density identity K = (pi/2) beta A/D") {
  for (int c : {2, 4}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const double d = 3.0;
      const auto [torus, pts] = place_lattice(LatticeSpec{c, beta}, d);
      const double A = torus.side * torus.side;
      const double D = std::numbers::pi * (d / 2) * (d / 2);
      const double k_l = 0.5 * std::numbers::pi * beta * A / D;
      CHECK(static_cast<double>(pts.size()) == doctest::Approx(k_l).epsilon(1e-9));
    }
  }
}

TEST_CASE("lattice rejects bad parameters") {
  CHECK_THROWS_AS((void)place_lattice(LatticeSpec{0, 1.0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS((void)place_lattice(LatticeSpec{2, 0.0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS((void)place_lattice(LatticeSpec{2, 1.0}, -1.0), std::invalid_argument);
}

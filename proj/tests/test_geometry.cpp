// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rrhmux/geometry.hpp"
#include "rrhmux/rng.hpp"

using namespace rrhmux;
using std::numbers::pi;

namespace {

// independent oracle: minimum over the 9 nearest periodic images
double dist9(const Torus& t, Point a, Point b) {
  double best = 1e300;
  for (int ix = -1; ix <= 1; ++ix)
    for (int iy = -1; iy <= 1; ++iy) {
      const double dx = b.x - a.x + ix * t.side;
      const double dy = b.y - a.y + iy * t.side;
      best = std::min(best, std::hypot(dx, dy));
    }
  return best;
}

Point rand_point(Rng& rng, double side) {
  return {rng.uniform(0.0, side), rng.uniform(0.0, side)};
}

}  // namespace

TEST_CASE("wrap canonicalizes into [0, side)^2") {
  const Torus t{10.0};
  const Point p = wrap(t, {-3.0, 27.5});
  CHECK(p.x == doctest::Approx(7.0));
  CHECK(p.y == doctest::Approx(7.5));
  const Point q = wrap(t, {10.0, 0.0});
  CHECK(q.x >= 0.0);
  CHECK(q.x < 10.0);
}

TEST_CASE("wrap-around distances") {
  const Torus t{10.0};
  CHECK(torus_distance(t, {0, 0}, {9, 0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(torus_distance(t, {0, 0}, {5, 5}) ==
        doctest::Approx(7.0710678118654755).epsilon(1e-12));
  CHECK(torus_distance(t, {3.2, 4.4}, {3.2, 4.4}) == 0.0);
  CHECK(torus_distance(t, {0.5, 0.5}, {9.5, 9.5}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("bearing of minimal displacement") {
  const Torus t{10.0};
  CHECK(torus_bearing(t, {0, 0}, {1, 0}) == doctest::Approx(0.0));
  // going down across the wrap is the short way: angle 3pi/2
  CHECK(torus_bearing(t, {0, 0}, {0, 9}) ==
        doctest::Approx(4.7123889803846897).epsilon(1e-12));
  CHECK(torus_bearing(t, {0, 0}, {1, 1}) == doctest::Approx(pi / 4).epsilon(1e-12));
  CHECK_THROWS_AS((void)torus_bearing(t, {2, 3}, {2, 3}), std::invalid_argument);
}

TEST_CASE("proximity is strict at the boundary") {
  const Torus t{10.0};
  const ProximityModel m{2.0, pi, 1, 0.0};
  // axis-aligned so the distance is exact in floating point
  CHECK(in_proximity(t, m, {0, 0}, {1.999, 0}));
  CHECK_FALSE(in_proximity(t, m, {0, 0}, {2.0, 0}));
  CHECK_FALSE(in_proximity(t, m, {0, 0}, {2.001, 0}));
  CHECK_FALSE(in_proximity(t, m, {0, 0}, {5, 5}));
  CHECK(in_proximity(t, m, {0.5, 0}, {9.5, 0}));  // across the wrap
}

TEST_CASE("distance matches 9-image oracle and is a metric") {
  const Torus t{7.3};
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const Point a = rand_point(rng, t.side);
    const Point b = rand_point(rng, t.side);
    const Point c = rand_point(rng, t.side);
    const double dab = torus_distance(t, a, b);
    CHECK(dab == doctest::Approx(dist9(t, a, b)).epsilon(1e-12));
    CHECK(dab == doctest::Approx(torus_distance(t, b, a)).epsilon(1e-12));
    CHECK(dab <= torus_distance(t, a, c) + torus_distance(t, c, b) + 1e-9);
    CHECK(dab <= t.side * std::sqrt(2.0) / 2.0 + 1e-12);
    CHECK(torus_distance2(t, a, b) == doctest::Approx(dab * dab).epsilon(1e-12));
  }
}

TEST_CASE("distances and bearings are translation invariant") {
  const Torus t{5.0};
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Point a = rand_point(rng, t.side);
    const Point b = rand_point(rng, t.side);
    const Point shift = rand_point(rng, t.side);
    const Point a2 = wrap(t, {a.x + shift.x, a.y + shift.y});
    const Point b2 = wrap(t, {b.x + shift.x, b.y + shift.y});
    CHECK(torus_distance(t, a, b) ==
          doctest::Approx(torus_distance(t, a2, b2)).epsilon(1e-9));
    const double beta1 = torus_bearing(t, a, b);
    const double beta2 = torus_bearing(t, a2, b2);
    const double diff = std::abs(beta1 - beta2);
    CHECK(std::min(diff, 2 * pi - diff) < 1e-9);
  }
}

TEST_CASE("sector overlap, S=6 arcs of width pi/3") {
  ProximityModel m;
  m.sectors = 6;
  m.theta = pi / 6;  // user arc of width pi/6
  // bearing pi/6: arc (pi/12, pi/4), inside sector 0 = [0, pi/3)
  CHECK(sector_overlap(m, pi / 6, 0));
  CHECK_FALSE(sector_overlap(m, pi / 6, 1));
  // bearing pi/3 sits exactly on the sector-0/1 boundary: open overlap with both
  CHECK(sector_overlap(m, pi / 3, 0));
  CHECK(sector_overlap(m, pi / 3, 1));
  CHECK_FALSE(sector_overlap(m, pi / 3, 2));
  CHECK_FALSE(sector_overlap(m, pi / 3, 5));
}

TEST_CASE("single sector always overlaps") {
  ProximityModel m;  // sectors = 1
  Rng rng(3);
  for (int i = 0; i < 50; ++i) CHECK(sector_overlap(m, rng.uniform(0.0, 2 * pi), 0));
}

TEST_CASE("theta equal to sector width touches one or two sectors") {
  ProximityModel m;
  m.sectors = 8;
  m.theta = 2 * pi / 8;
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const double b = rng.uniform(0.0, 2 * pi);
    int hits = 0;
    for (int s = 0; s < m.sectors; ++s) hits += sector_overlap(m, b, s) ? 1 : 0;
    CHECK(hits >= 1);
    CHECK(hits <= 2);
  }
}

TEST_CASE("sector offset rotates the partition") {
  ProximityModel m;
  m.sectors = 4;
  m.theta = pi / 8;
  m.sector_offset = pi / 2;
  // sector 0 now spans [pi/2, pi); a bearing of 0 falls in sector 3
  CHECK_FALSE(sector_overlap(m, 0.0, 0));
  CHECK(sector_overlap(m, 0.0, 3));
  CHECK(sector_overlap(m, 0.6 * pi, 0));
}

TEST_CASE("disc area") {
  ProximityModel m;
  m.r_o = 2.0;
  CHECK(disc_area(m) == doctest::Approx(4.0 * pi).epsilon(1e-15));
}

// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rrhmux {

namespace {

// wrap a coordinate difference into [-side/2, side/2); half-period maps to
// -side/2, which realizes the lexicographic tie-break per axis
double axis_delta(double d, double side) {
  return d - side * std::floor(d / side + 0.5);
}

double positive_fmod(double a, double m) {
  double r = std::fmod(a, m);
  if (r < 0.0) r += m;
  return r;
}

}  // namespace

Point wrap(const Torus& t, Point p) {
  double x = std::fmod(p.x, t.side);
  double y = std::fmod(p.y, t.side);
  if (x < 0.0) x += t.side;
  if (y < 0.0) y += t.side;
  return {x, y};
}

double torus_distance2(const Torus& t, Point a, Point b) {
  const double dx = axis_delta(b.x - a.x, t.side);
  const double dy = axis_delta(b.y - a.y, t.side);
  return dx * dx + dy * dy;
}

double torus_distance(const Torus& t, Point a, Point b) {
  return std::sqrt(torus_distance2(t, a, b));
}

double torus_bearing(const Torus& t, Point from, Point to) {
  const double dx = axis_delta(to.x - from.x, t.side);
  const double dy = axis_delta(to.y - from.y, t.side);
  if (dx == 0.0 && dy == 0.0)
    throw std::invalid_argument("torus_bearing: undefined bearing (coincident points)");
  double ang = std::atan2(dy, dx);
  if (ang < 0.0) ang += 2.0 * std::numbers::pi;
  return ang;
}

bool in_proximity(const Torus& t, const ProximityModel& m, Point user, Point rrh) {
  return torus_distance2(t, user, rrh) < m.r_o * m.r_o;
}

bool sector_overlap(const ProximityModel& m, double bearing, int sector_index) {
  if (m.sectors == 1) return true;
  const double two_pi = 2.0 * std::numbers::pi;
  const double width = two_pi / m.sectors;
  const double a = positive_fmod(bearing - 0.5 * m.theta, two_pi);
  const double b = positive_fmod(m.sector_offset + sector_index * width, two_pi);
  // open arcs [a, a+theta] and [b, b+width) intersect iff one start lies
  // strictly inside the other arc (shared start counts: both widths > 0)
  const double d = positive_fmod(b - a, two_pi);
  if (d < m.theta) return true;
  return two_pi - d < width;
}

}  // namespace rrhmux

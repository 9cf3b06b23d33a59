// SPDX-License-Identifier: Apache-2.0
// Toroidal (wrap-around square) geometry: distances, bearings, disc proximity,
// angular sector overlap.
#pragma once

#include <numbers>

namespace rrhmux {

struct Torus {
  double side = 1.0;  // side = sqrt(A)
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// r_o: serving/contamination radius. Disc diameter d = 2*r_o, area D = pi*r_o^2.
// theta: user angular spread in (0, pi]; sectors: S arcs of width 2*pi/S each,
// sector s spanning [sector_offset + s*2pi/S, sector_offset + (s+1)*2pi/S).
struct ProximityModel {
  double r_o = 1.0;
  double theta = std::numbers::pi;
  int sectors = 1;
  double sector_offset = 0.0;
};

// canonical representative in [0, side) x [0, side)
Point wrap(const Torus& t, Point p);

// min over periodic images of the Euclidean distance (and its square)
double torus_distance(const Torus& t, Point a, Point b);
double torus_distance2(const Torus& t, Point a, Point b);

// angle in [0, 2pi) of the minimal displacement from `from` to `to`; ties
// between periodic images break toward the lexicographically smallest
// (dx, dy). Throws std::invalid_argument for coincident points.
double torus_bearing(const Torus& t, Point from, Point to);

// strict: torus_distance < r_o
bool in_proximity(const Torus& t, const ProximityModel& m, Point user, Point rrh);

// true iff the open interiors of the user arc [bearing - theta/2,
// bearing + theta/2] and sector arc intersect; measure-zero touching excluded.
bool sector_overlap(const ProximityModel& m, double bearing, int sector_index);

inline double disc_area(const ProximityModel& m) {
  return std::numbers::pi * m.r_o * m.r_o;
}

}  // namespace rrhmux

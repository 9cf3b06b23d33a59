// SPDX-License-Identifier: Apache-2.0
// Placement generators: uniform random sites/users and the two-offset-square
// "hexagonal" lattice construction.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rrhmux/geometry.hpp"
#include "rrhmux/rng.hpp"

namespace rrhmux {

struct DeploymentSnapshot {
  Torus torus;
  std::vector<Point> rrh_positions;
  std::vector<Point> user_positions;
  ProximityModel model;
  // optional per-RRH sector orientations; empty means model.sector_offset everywhere
  std::vector<double> sector_offsets;
};

// two offset square sublattices with spacing d/sqrt(beta); 2*c^2 points on a
// torus of side c*d/sqrt(beta), i.e. A = c^2 d^2 / beta
struct LatticeSpec {
  int c = 1;        // points per sublattice side
  double beta = 2.0;  // density parameter, K_L(beta) = (pi/2) beta (A/D)
};

std::vector<Point> place_random(const Torus& t, std::size_t n, Rng& rng);

std::pair<Torus, std::vector<Point>> place_lattice(const LatticeSpec& spec, double d);

inline std::pair<Torus, std::vector<Point>> place_user_lattice(const LatticeSpec& spec, double d) {
  return place_lattice(spec, d);
}
// identical construction applied to RRH sites
inline std::pair<Torus, std::vector<Point>> place_rrh_lattice(const LatticeSpec& spec, double d) {
  return place_lattice(spec, d);
}

}  // namespace rrhmux

// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/deployment.hpp"

#include <cmath>
#include <stdexcept>

namespace rrhmux {

std::vector<Point> place_random(const Torus& t, std::size_t n, Rng& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = t.side * rng.uniform();
    const double y = t.side * rng.uniform();
    pts.push_back(wrap(t, {x, y}));
  }
  return pts;
}

std::pair<Torus, std::vector<Point>> place_lattice(const LatticeSpec& spec, double d) {
  if (spec.c < 1) throw std::invalid_argument("lattice: c must be >= 1");
  if (!(spec.beta > 0.0)) throw std::invalid_argument("lattice: beta must be > 0");
  if (!(d > 0.0)) throw std::invalid_argument("lattice: d must be > 0");
  const double a = d / std::sqrt(spec.beta);  // grid spacing
  const Torus t{spec.c * a};
  std::vector<Point> pts;
  pts.reserve(2u * spec.c * spec.c);
  for (int i = 0; i < spec.c; ++i)
    for (int j = 0; j < spec.c; ++j) pts.push_back(wrap(t, {i * a, j * a}));
  for (int i = 0; i < spec.c; ++i)
    for (int j = 0; j < spec.c; ++j)
      pts.push_back(wrap(t, {(i + 0.5) * a, (j + 0.5) * a}));
  return {t, pts};
}

}  // namespace rrhmux

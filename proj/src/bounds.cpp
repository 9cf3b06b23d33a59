// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rrhmux {

double m_max(double area_ratio) {
  if (!(area_ratio > 0.0)) throw std::invalid_argument("m_max: area_ratio must be > 0");
  return std::numbers::pi * area_ratio;
}

double lambda_area(double beta, double D) {
  if (!(beta > 0.0)) throw std::invalid_argument("lambda_area: beta must be > 0");
  if (!(D > 0.0)) throw std::invalid_argument("lambda_area: D must be > 0");
  if (beta > 2.0) return 0.0;  // discs overlap everywhere, no user can be served
  const double r = std::sqrt(2.0 / beta) - 1.0;
  const double sq = (4.0 / std::numbers::pi) * D * r * r;  // smallest-square approximation
  return std::min(D, sq);
}

double p1(double beta, double n_sites, double area_ratio) {
  if (!(area_ratio > 0.0)) throw std::invalid_argument("p1: area_ratio must be > 0");
  if (n_sites < 0.0) throw std::invalid_argument("p1: N must be >= 0");
  const double frac = lambda_area(beta, 1.0) / area_ratio;  // lambda/A
  return 1.0 - std::pow(1.0 - frac, n_sites);
}

std::vector<double> default_beta_grid() {
  constexpr int n = 128;
  std::vector<double> g(n);
  const double lo = std::log(0.5), hi = std::log(2.0);
  for (int i = 0; i < n; ++i) g[i] = std::exp(lo + (hi - lo) * i / (n - 1));
  g.front() = 0.5;
  g.back() = 2.0;
  return g;
}

std::pair<double, double> lattice_bound(const BoundParams& params) {
  std::vector<double> grid =
      params.beta_grid.empty() ? default_beta_grid() : params.beta_grid;
  if (grid.empty()) throw std::invalid_argument("lattice_bound: empty beta grid");
  std::sort(grid.begin(), grid.end());  // ascending, so ties keep the smaller beta
  double best = -1.0, best_beta = grid.front();
  for (double beta : grid) {
    if (!(beta > 0.0) || beta > 2.0)
      throw std::invalid_argument("lattice_bound: beta grid values must lie in (0, 2]");
    const double k_beta = 0.5 * std::numbers::pi * beta * params.area_ratio;
    const double v = k_beta * p1(beta, params.n_sites, params.area_ratio);
    if (v > best) {  // strict: ties keep the smaller beta
      best = v;
      best_beta = beta;
    }
  }
  return {best, best_beta};
}

}  // namespace rrhmux

// SPDX-License-Identifier: Apache-2.0
// Closed-form multiplexing-gain upper bounds for the lattice-scheduled
// system: m_max, the non-overlap area lambda(beta), the service probability
// p1(beta, N), and the lattice bound m*LU1(N).
#pragma once

#include <utility>
#include <vector>

namespace rrhmux {

struct BoundParams {
  double area_ratio = 10.0;       // A/D
  double n_sites = 0.0;           // N
  std::vector<double> beta_grid;  // empty -> default_beta_grid()
};

// pi * (A/D)
double m_max(double area_ratio);

// min(D, (4/pi) * D * (sqrt(2/beta) - 1)^2) for beta in (0, 2]; 0 for beta > 2
double lambda_area(double beta, double D);

// 1 - (1 - lambda(beta)/A)^N; only A/D matters
double p1(double beta, double n_sites, double area_ratio);

// 128 log-spaced points in [0.5, 2]
std::vector<double> default_beta_grid();

// max over the beta grid of K(beta) * p1(beta, N) with K(beta) = (pi/2) beta (A/D);
// returns (m*LU1, beta*), ties toward smaller beta
std::pair<double, double> lattice_bound(const BoundParams& params);

}  // namespace rrhmux

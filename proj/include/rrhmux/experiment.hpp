// SPDX-License-Identifier: Apache-2.0
// Scenario orchestration: parse an ExperimentConfig from a key-value Config,
// run the sweep, and produce CSV-ready rows.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rrhmux/config.hpp"
#include "rrhmux/csv.hpp"
#include "rrhmux/serving.hpp"

namespace rrhmux {

enum class Scenario {
  random_random,
  lattice_rrh,
  lattice_users,
  sectorized,
  code_efficiency,
  phy_validation,
};

struct ExperimentConfig {
  Scenario scenario = Scenario::random_random;
  std::uint64_t seed = 1;
  int trials = 100;
  std::string out;  // empty: caller decides (stdout)

  // geometry / serving
  double area_ratio = 10.0;
  double r_o = 1.0;
  int Q = 8;
  std::vector<int> q_grid{1};
  std::vector<int> N_grid{2048};
  std::vector<int> K_grid;  // empty -> default_K_grid(area_ratio, Q)
  bool emit_gain = true;
  bool emit_collision = false;
  double theta = std::numbers::pi;
  std::vector<int> S_grid{1};
  double sector_offset = 0.0;
  bool random_sector_offsets = false;
  SectorRule rule = SectorRule::site_consistent;
  bool redraw_rrh = false;
  bool balanced_groups = false;

  // lattice scenarios
  int c = 3;
  std::vector<int> c_grid{32};
  std::vector<double> beta_grid;  // lattice_users; empty -> {0.5..2 step 0.25}
  double d = 2.0;                 // disc diameter for lattice construction

  // code_efficiency
  std::vector<int> L_grid{2, 4, 8, 16, 32, 64};
  std::vector<std::int64_t> code_K_grid;  // empty -> log grid 1..10^4

  // phy_validation
  std::vector<int> M_grid{1, 4, 16, 64, 256, 1024};
  double snr_db = 10.0;
  int L = 5;
  int ell = 3;
  int code_K = 8;
  double p_active = 0.5;
  int taps = 1;
  int n_fft = 64;

  static ExperimentConfig from_config(const Config& cfg);
};

std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

// m_max + m*LU1(N) rows for the CLI `bound` subcommand
std::vector<ResultRow> bound_table(double area_ratio, const std::vector<double>& n_grid,
                                   int beta_points);

}  // namespace rrhmux

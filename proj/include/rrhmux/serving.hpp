// SPDX-License-Identifier: Apache-2.0
// Proximity graphs, the pilot-group collision/serving rule, and Monte Carlo
// multiplexing-gain estimation.
#pragma once

#include <cstdint>
#include <vector>

#include "rrhmux/deployment.hpp"

namespace rrhmux {

// Q pilot REs per RB split into Q/q groups of q dimensions each
struct PilotGrouping {
  int Q = 1;
  int q = 1;
  std::vector<int> group_of_user;  // user index -> group in [0, Q/q)
  int num_groups() const { return Q / q; }
};

// How sectorized sites apply the collision rule (S > 1 only; identical at S = 1):
//   site_consistent — user k is served by site j iff every sector of j whose
//     arc overlaps k is collision-free for k's group. A site that sees a
//     collision omni-directionally then serves nobody involved, matching the
//     all-or-nothing rule; theta = pi reproduces omni behavior exactly.
//   per_sector — each (site, sector) node applies the all-or-nothing rule
//     independently; a user is served if any overlapped sector is clean.
enum class SectorRule { site_consistent, per_sector };

struct ProximityGraph {
  int sites = 0;
  int sectors = 1;
  // node (j, s) = j * sectors + s; users within r_o of site j whose spread
  // overlaps sector s
  std::vector<std::vector<int>> node_users;
  // per user: overlapped nodes, ascending (groups nodes of a site together)
  std::vector<std::vector<int>> user_nodes;
};

ProximityGraph build_graph(const DeploymentSnapshot& snap);

struct SlotResult {
  // per serving node: the served set S_j(t). Nodes are (site, sector) pairs
  // under per_sector; sites under site_consistent (and always at S = 1).
  std::vector<std::vector<int>> served_by_node;
  std::vector<int> served_users;  // union, ascending
};

SlotResult served_sets(const ProximityGraph& graph, const PilotGrouping& grouping,
                       SectorRule rule = SectorRule::site_consistent);

struct GainConfig {
  double area_ratio = 10.0;  // A/D; torus side = r_o * sqrt(area_ratio * pi)
  double r_o = 1.0;
  int N = 0;  // RRH sites
  int K = 0;  // active users (total, across all groups)
  int Q = 8;
  int q = 1;
  double theta = std::numbers::pi;
  int sectors = 1;
  double sector_offset = 0.0;
  bool random_sector_offsets = false;
  SectorRule rule = SectorRule::site_consistent;
  bool redraw_rrh = false;      // fresh RRH layout every slot
  bool balanced_groups = false;  // round-robin groups on a random permutation
  int trials = 100;
  std::uint64_t seed = 1;
  // optional fixed geometry (lattice scenarios); overrides the random draws
  const std::vector<Point>* fixed_rrh = nullptr;
  const std::vector<Point>* fixed_users = nullptr;
  const Torus* fixed_torus = nullptr;
};

struct GainResult {
  double gain_per_re = 0.0;  // mean |S(t)| / Q
  double stderr_ = 0.0;
  double mean_served = 0.0;  // mean |S(t)|
  int trials = 0;
};

// mean over T slots of |S(t)| / Q (fresh users per slot; RRH fixed unless
// redraw_rrh). Per-slot user positions and grouping depend only on
// (seed, K, slot), so runs differing in q, S or rule share randomness.
GainResult measure_gain(const GainConfig& config);

struct OptimizeResult {
  int K_star = 0;
  double m_star = 0.0;
  double stderr_ = 0.0;
};

// grid argmax of measure_gain over K; ties toward smaller K
OptimizeResult optimize_K(const GainConfig& config, const std::vector<int>& K_grid);

// fraction of (node, group) pairs holding at least one user whose count
// exceeds q; averaged over slots that have occupied pairs
GainResult collision_probability(const GainConfig& config);

// default optimization grid: 24 geometric points in [1, 8 * Q * area_ratio]
std::vector<int> default_K_grid(double area_ratio, int Q);

}  // namespace rrhmux

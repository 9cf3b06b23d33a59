// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/serving.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rrhmux {

namespace {

void validate_grouping(const ProximityGraph& g, const PilotGrouping& grouping) {
  if (grouping.Q < 1 || grouping.q < 1 || grouping.Q % grouping.q != 0)
    throw std::invalid_argument("served_sets: q must divide Q, both positive");
  if (grouping.group_of_user.size() != g.user_nodes.size())
    throw std::invalid_argument("served_sets: grouping does not cover the graph's users");
  const int G = grouping.num_groups();
  for (int gr : grouping.group_of_user)
    if (gr < 0 || gr >= G) throw std::invalid_argument("served_sets: group index out of range");
}

}  // namespace

ProximityGraph build_graph(const DeploymentSnapshot& snap) {
  const Torus& t = snap.torus;
  const ProximityModel& m = snap.model;
  const int S = m.sectors;
  const int N = static_cast<int>(snap.rrh_positions.size());
  const int K = static_cast<int>(snap.user_positions.size());
  if (S < 1) throw std::invalid_argument("build_graph: sectors must be >= 1");
  if (!snap.sector_offsets.empty() &&
      snap.sector_offsets.size() != snap.rrh_positions.size())
    throw std::invalid_argument("build_graph: sector_offsets size mismatch");

  ProximityGraph g;
  g.sites = N;
  g.sectors = S;
  g.node_users.assign(static_cast<std::size_t>(N) * S, {});
  g.user_nodes.assign(K, {});
  const double r2 = m.r_o * m.r_o;

  // bucket sites into a wrap-around grid of cells >= r_o so each user only
  // tests its 3x3 neighborhood; brute force when the torus is too small
  const int ncell = static_cast<int>(std::floor(t.side / m.r_o));
  const bool use_grid = ncell >= 4 && N >= 32;
  std::vector<std::vector<int>> cells;
  if (use_grid) {
    cells.assign(static_cast<std::size_t>(ncell) * ncell, {});
    for (int j = 0; j < N; ++j) {
      const Point p = snap.rrh_positions[j];
      const int cx = std::min(ncell - 1, static_cast<int>(p.x / t.side * ncell));
      const int cy = std::min(ncell - 1, static_cast<int>(p.y / t.side * ncell));
      cells[static_cast<std::size_t>(cx) * ncell + cy].push_back(j);
    }
  }

  ProximityModel pm = m;
  for (int k = 0; k < K; ++k) {
    const Point u = snap.user_positions[k];
    auto visit = [&](int j) {
      const Point site = snap.rrh_positions[j];
      const double d2 = torus_distance2(t, u, site);
      if (!(d2 < r2)) return;
      if (S == 1) {
        g.node_users[j].push_back(k);
        g.user_nodes[k].push_back(j);
        return;
      }
      pm.sector_offset = snap.sector_offsets.empty() ? m.sector_offset : snap.sector_offsets[j];
      if (d2 == 0.0) {  // user on top of the site: all sectors see it
        for (int s = 0; s < S; ++s) {
          g.node_users[static_cast<std::size_t>(j) * S + s].push_back(k);
          g.user_nodes[k].push_back(j * S + s);
        }
        return;
      }
      const double bearing = torus_bearing(t, site, u);
      for (int s = 0; s < S; ++s) {
        if (sector_overlap(pm, bearing, s)) {
          g.node_users[static_cast<std::size_t>(j) * S + s].push_back(k);
          g.user_nodes[k].push_back(j * S + s);
        }
      }
    };
    if (use_grid) {
      const int cx = std::min(ncell - 1, static_cast<int>(u.x / t.side * ncell));
      const int cy = std::min(ncell - 1, static_cast<int>(u.y / t.side * ncell));
      for (int dx = -1; dx <= 1; ++dx) {
        const int x = (cx + dx + ncell) % ncell;
        for (int dy = -1; dy <= 1; ++dy) {
          const int y = (cy + dy + ncell) % ncell;
          for (int j : cells[static_cast<std::size_t>(x) * ncell + y]) visit(j);
        }
      }
    } else {
      for (int j = 0; j < N; ++j) visit(j);
    }
    std::sort(g.user_nodes[k].begin(), g.user_nodes[k].end());
  }
  return g;
}

SlotResult served_sets(const ProximityGraph& g, const PilotGrouping& grouping,
                       SectorRule rule) {
  validate_grouping(g, grouping);
  const int S = g.sectors;
  const int G = grouping.num_groups();
  const int q = grouping.q;
  const int users = static_cast<int>(g.user_nodes.size());
  const std::size_t nodes = g.node_users.size();

  // per-node, per-group collision flags
  std::vector<std::uint8_t> dirty(nodes * G, 0);
  std::vector<int> cnt(G, 0);
  for (std::size_t n = 0; n < nodes; ++n) {
    const auto& nu = g.node_users[n];
    if (nu.empty()) continue;
    for (int k : nu) ++cnt[grouping.group_of_user[k]];
    for (int gr = 0; gr < G; ++gr)
      if (cnt[gr] > q) dirty[n * G + gr] = 1;
    for (int k : nu) cnt[grouping.group_of_user[k]] = 0;
  }

  SlotResult out;
  std::vector<std::uint8_t> served(users, 0);
  if (rule == SectorRule::per_sector || S == 1) {
    out.served_by_node.assign(nodes, {});
    for (std::size_t n = 0; n < nodes; ++n) {
      for (int k : g.node_users[n]) {
        if (!dirty[n * G + grouping.group_of_user[k]]) {
          out.served_by_node[n].push_back(k);
          served[k] = 1;
        }
      }
    }
  } else {
    // site_consistent: a site serves user k iff every sector of the site
    // overlapped by k is collision-free for k's group
    out.served_by_node.assign(g.sites, {});
    for (int k = 0; k < users; ++k) {
      const int gr = grouping.group_of_user[k];
      const auto& un = g.user_nodes[k];  // ascending: a site's nodes are contiguous
      std::size_t i = 0;
      while (i < un.size()) {
        const int site = un[i] / S;
        bool clean = true;
        while (i < un.size() && un[i] / S == site) {
          if (dirty[static_cast<std::size_t>(un[i]) * G + gr]) clean = false;
          ++i;
        }
        if (clean) {
          out.served_by_node[site].push_back(k);
          served[k] = 1;
        }
      }
    }
  }
  for (int k = 0; k < users; ++k)
    if (served[k]) out.served_users.push_back(k);
  return out;
}

namespace {

void validate_gain_config(const GainConfig& c) {
  if (c.N < 0 || c.K < 0) throw std::invalid_argument("gain: N and K must be >= 0");
  if (c.trials < 1) throw std::invalid_argument("gain: trials must be >= 1");
  if (c.Q < 1 || c.q < 1 || c.Q % c.q != 0)
    throw std::invalid_argument("gain: q must divide Q, both positive");
  if (!(c.r_o > 0.0)) throw std::invalid_argument("gain: r_o must be > 0");
  if (!c.fixed_torus && !(c.area_ratio > 0.0))
    throw std::invalid_argument("gain: area_ratio must be > 0");
  if (!(c.theta > 0.0) || c.theta > std::numbers::pi)
    throw std::invalid_argument("gain: theta must lie in (0, pi]");
  if (c.sectors < 1) throw std::invalid_argument("gain: sectors must be >= 1");
}

// Runs the T-slot loop: deployment, grouping, graph. Calls
// per_slot(graph, grouping) once per slot.
template <class F>
void run_slots(const GainConfig& c, F&& per_slot) {
  validate_gain_config(c);
  DeploymentSnapshot snap;
  snap.torus = c.fixed_torus ? *c.fixed_torus
                             : Torus{c.r_o * std::sqrt(c.area_ratio * std::numbers::pi)};
  snap.model = ProximityModel{c.r_o, c.theta, c.sectors, c.sector_offset};

  const std::size_t n_sites =
      c.fixed_rrh ? c.fixed_rrh->size() : static_cast<std::size_t>(c.N);
  if (c.random_sector_offsets && c.sectors > 1) {
    Rng rng = Rng::substream(c.seed, Stream::sector_offsets, n_sites);
    snap.sector_offsets.resize(n_sites);
    for (double& o : snap.sector_offsets) o = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }

  const int K = c.fixed_users ? static_cast<int>(c.fixed_users->size()) : c.K;
  const int G = c.Q / c.q;
  PilotGrouping grouping{c.Q, c.q, {}};

  if (c.fixed_rrh)
    snap.rrh_positions = *c.fixed_rrh;
  else if (!c.redraw_rrh) {
    Rng rng = Rng::substream(c.seed, Stream::rrh_placement, static_cast<std::uint64_t>(c.N));
    snap.rrh_positions = place_random(snap.torus, static_cast<std::size_t>(c.N), rng);
  }

  for (int t = 0; t < c.trials; ++t) {
    if (!c.fixed_rrh && c.redraw_rrh) {
      Rng rng = Rng::substream(c.seed, Stream::rrh_placement,
                               static_cast<std::uint64_t>(c.N), static_cast<std::uint64_t>(t));
      snap.rrh_positions = place_random(snap.torus, static_cast<std::size_t>(c.N), rng);
    }
    Rng rng = Rng::substream(c.seed, Stream::user_placement,
                             static_cast<std::uint64_t>(K), static_cast<std::uint64_t>(t));
    if (c.fixed_users)
      snap.user_positions = *c.fixed_users;
    else
      snap.user_positions = place_random(snap.torus, static_cast<std::size_t>(K), rng);

    grouping.group_of_user.assign(K, 0);
    if (G > 1) {
      if (c.balanced_groups) {
        std::vector<int> perm(K);
        for (int k = 0; k < K; ++k) perm[k] = k;
        for (int k = K - 1; k > 0; --k)
          std::swap(perm[k], perm[rng.bounded(static_cast<std::uint64_t>(k) + 1)]);
        for (int i = 0; i < K; ++i) grouping.group_of_user[perm[i]] = i % G;
      } else {
        for (int k = 0; k < K; ++k)
          grouping.group_of_user[k] =
              std::min(G - 1, static_cast<int>(rng.uniform() * G));
      }
    }
    per_slot(build_graph(snap), grouping);
  }
}

struct Accumulator {
  double sum = 0.0, sum2 = 0.0;
  long n = 0;
  void add(double v) {
    sum += v;
    sum2 += v * v;
    ++n;
  }
  double mean() const { return n ? sum / n : 0.0; }
  double se() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = std::max(0.0, (sum2 - n * m * m) / (n - 1));
    return std::sqrt(var / n);
  }
};

}  // namespace

GainResult measure_gain(const GainConfig& config) {
  Accumulator acc;
  run_slots(config, [&](const ProximityGraph& g, const PilotGrouping& grouping) {
    const SlotResult slot = served_sets(g, grouping, config.rule);
    acc.add(static_cast<double>(slot.served_users.size()) / config.Q);
  });
  return {acc.mean(), acc.se(), acc.mean() * config.Q, static_cast<int>(acc.n)};
}

OptimizeResult optimize_K(const GainConfig& config, const std::vector<int>& K_grid) {
  if (K_grid.empty()) throw std::invalid_argument("optimize_K: empty K grid");
  std::vector<int> grid = K_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  OptimizeResult best{grid.front(), -1.0, 0.0};
  for (int K : grid) {
    GainConfig c = config;
    c.K = K;
    const GainResult r = measure_gain(c);
    if (r.gain_per_re > best.m_star) {  // strict: ties keep the smaller K
      best = {K, r.gain_per_re, r.stderr_};
    }
  }
  return best;
}

GainResult collision_probability(const GainConfig& config) {
  Accumulator acc;
  run_slots(config, [&](const ProximityGraph& g, const PilotGrouping& grouping) {
    validate_grouping(g, grouping);
    const int G = grouping.num_groups();
    std::vector<int> cnt(G, 0);
    long occupied = 0, collided = 0;
    for (const auto& nu : g.node_users) {
      if (nu.empty()) continue;
      for (int k : nu) ++cnt[grouping.group_of_user[k]];
      for (int gr = 0; gr < G; ++gr) {
        if (cnt[gr] > 0) {
          ++occupied;
          if (cnt[gr] > grouping.q) ++collided;
        }
      }
      for (int k : nu) cnt[grouping.group_of_user[k]] = 0;
    }
    if (occupied > 0) acc.add(static_cast<double>(collided) / occupied);
  });
  return {acc.mean(), acc.se(), acc.mean(), static_cast<int>(acc.n)};
}

std::vector<int> default_K_grid(double area_ratio, int Q) {
  const double k_max = std::max(1.0, 8.0 * Q * area_ratio);
  std::vector<int> grid;
  for (int i = 0; i < 24; ++i) {
    const double v = std::exp(std::log(k_max) * i / 23.0);
    grid.push_back(static_cast<int>(std::lround(v)));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace rrhmux

// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rrhmux/bounds.hpp"
#include "rrhmux/phy.hpp"
#include "rrhmux/pilotcode.hpp"

namespace rrhmux {

namespace {

Scenario parse_scenario(const std::string& s) {
  if (s == "random_random") return Scenario::random_random;
  if (s == "lattice_rrh") return Scenario::lattice_rrh;
  if (s == "lattice_users") return Scenario::lattice_users;
  if (s == "sectorized") return Scenario::sectorized;
  if (s == "code_efficiency") return Scenario::code_efficiency;
  if (s == "phy_validation") return Scenario::phy_validation;
  throw ConfigError("config: field 'scenario': unknown scenario '" + s + "'");
}

SectorRule parse_rule(const std::string& s) {
  if (s == "site_consistent") return SectorRule::site_consistent;
  if (s == "per_sector") return SectorRule::per_sector;
  throw ConfigError("config: field 'sector_rule': unknown rule '" + s + "'");
}

std::vector<int> int_list(const Config& cfg, const std::string& key,
                          std::vector<int> dflt) {
  if (!cfg.has(key)) return dflt;
  std::vector<int> out;
  for (auto v : cfg.get_int_list(key)) {
    if (v < 0 || v > (1 << 30))
      throw ConfigError("config: field '" + key + "': value out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::int64_t> log_grid_1_to(std::int64_t hi, int points) {
  std::vector<std::int64_t> g;
  for (int i = 0; i < points; ++i) {
    const double v = std::exp(std::log(static_cast<double>(hi)) * i / (points - 1));
    g.push_back(std::llround(v));
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_config(const Config& cfg) {
  ExperimentConfig e;
  e.scenario = parse_scenario(cfg.get_string("scenario"));
  const auto seed = cfg.get_int("seed", 1);
  if (seed < 0) throw ConfigError("config: field 'seed': must be >= 0");
  e.seed = static_cast<std::uint64_t>(seed);
  e.out = cfg.get_string("out", "");

  switch (e.scenario) {
    case Scenario::random_random:
    case Scenario::sectorized:
    case Scenario::lattice_rrh: {
      e.trials = static_cast<int>(cfg.get_int("trials", 100));
      e.area_ratio = cfg.get_double("area_ratio", 10.0);
      e.r_o = cfg.get_double("r_o", 1.0);
      e.Q = static_cast<int>(cfg.get_int("Q", 8));
      e.q_grid = cfg.has("q_grid") ? int_list(cfg, "q_grid", {})
                                   : std::vector<int>{static_cast<int>(cfg.get_int("q", 1))};
      if (cfg.has("K_grid")) {
        if (cfg.get_string("K_grid") != "auto") e.K_grid = int_list(cfg, "K_grid", {});
      } else if (cfg.has("K")) {
        e.K_grid = {static_cast<int>(cfg.get_int("K"))};
      }
      e.rule = parse_rule(cfg.get_string("sector_rule", "site_consistent"));
      e.redraw_rrh = cfg.get_bool("redraw_rrh", false);
      e.balanced_groups = cfg.get_bool("balanced_groups", false);
      if (cfg.has("metrics")) {
        e.emit_gain = e.emit_collision = false;
        std::string s = cfg.get_string("metrics");
        if (s.find("gain") != std::string::npos) e.emit_gain = true;
        if (s.find("collision") != std::string::npos) e.emit_collision = true;
        if (!e.emit_gain && !e.emit_collision)
          throw ConfigError("config: field 'metrics': expected gain and/or collision");
      }
      if (e.scenario == Scenario::sectorized) {
        e.theta = cfg.get_double("theta", std::numbers::pi);
        e.S_grid = int_list(cfg, "S_grid", {1});
        e.sector_offset = cfg.get_double("sector_offset", 0.0);
        e.random_sector_offsets = cfg.get_bool("random_sector_offsets", false);
      }
      if (e.scenario == Scenario::lattice_rrh) {
        e.c_grid = int_list(cfg, "c_grid", {32});
      } else {
        e.N_grid = int_list(cfg, "N_grid", {2048});
      }
      break;
    }
    case Scenario::lattice_users: {
      e.trials = static_cast<int>(cfg.get_int("trials", 100));
      e.r_o = cfg.get_double("r_o", 1.0);
      e.c = static_cast<int>(cfg.get_int("c", 3));
      e.d = cfg.get_double("d", 2.0 * e.r_o);
      e.beta_grid = cfg.has("beta_grid")
                        ? cfg.get_double_list("beta_grid")
                        : std::vector<double>{0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
      e.N_grid = int_list(cfg, "N_grid", {2048});
      e.redraw_rrh = cfg.get_bool("redraw_rrh", true);
      break;
    }
    case Scenario::code_efficiency: {
      e.L_grid = int_list(cfg, "L_grid", {2, 4, 8, 16, 32, 64});
      if (cfg.has("K_grid") && cfg.get_string("K_grid") != "auto")
        e.code_K_grid = cfg.get_int_list("K_grid");
      else
        e.code_K_grid = log_grid_1_to(10000, 25);
      break;
    }
    case Scenario::phy_validation: {
      e.trials = static_cast<int>(cfg.get_int("trials", 10000));
      e.M_grid = int_list(cfg, "M_grid", {1, 4, 16, 64, 256, 1024});
      e.snr_db = cfg.get_double("snr_db", 10.0);
      e.L = static_cast<int>(cfg.get_int("L", 5));
      e.ell = static_cast<int>(cfg.get_int("ell", 3));
      e.code_K = static_cast<int>(cfg.get_int("K", 8));
      e.p_active = cfg.get_double("p_active", 0.5);
      e.taps = static_cast<int>(cfg.get_int("taps", 1));
      e.n_fft = static_cast<int>(cfg.get_int("n_fft", 64));
      break;
    }
  }
  cfg.check_all_used();
  if (e.trials < 1) throw ConfigError("config: field 'trials': must be >= 1");
  return e;
}

namespace {

// gain (and optionally collision) rows for one (N, q, S) cell, including the
// K-optimized m_star/K_star rows when the grid has more than one point
void gain_rows(std::vector<ResultRow>& rows, const ExperimentConfig& e,
               const GainConfig& gc, ResultRow proto) {
  const std::vector<int> grid =
      e.K_grid.empty() ? default_K_grid(gc.area_ratio, gc.Q) : e.K_grid;
  if (grid.empty()) throw ConfigError("config: field 'K_grid': empty grid");
  int k_star = grid.front();
  double m_star = -1.0, se_star = 0.0;
  for (int K : grid) {
    GainConfig c = gc;
    c.K = K;
    ResultRow r = proto;
    r.K = K;
    if (e.emit_gain) {
      const GainResult g = measure_gain(c);
      r.metric = "gain_per_re";
      r.value = g.gain_per_re;
      r.stderr_ = g.stderr_;
      r.trials = g.trials;
      rows.push_back(r);
      if (g.gain_per_re > m_star) {
        m_star = g.gain_per_re;
        se_star = g.stderr_;
        k_star = K;
      }
    }
    if (e.emit_collision) {
      const GainResult p = collision_probability(c);
      r.metric = "collision_prob";
      r.value = p.gain_per_re;
      r.stderr_ = p.stderr_;
      r.trials = p.trials;
      rows.push_back(r);
    }
  }
  if (e.emit_gain && grid.size() > 1) {
    ResultRow r = proto;
    r.metric = "m_star";
    r.value = m_star;
    r.stderr_ = se_star;
    r.trials = gc.trials;
    rows.push_back(r);
    r.metric = "K_star";
    r.value = k_star;
    r.stderr_ = 0.0;
    rows.push_back(r);
  }
}

std::vector<ResultRow> run_random_like(const ExperimentConfig& e) {
  std::vector<ResultRow> rows;
  const bool lattice = e.scenario == Scenario::lattice_rrh;
  const bool sector = e.scenario == Scenario::sectorized;
  const std::vector<int>& outer = lattice ? e.c_grid : e.N_grid;
  for (int ni : outer) {
    // lattice_rrh: N = 2c^2 sites on two offset square grids spanning the
    // same torus as the random deployment (spacing side/c)
    Torus torus{e.r_o * std::sqrt(e.area_ratio * std::numbers::pi)};
    std::vector<Point> lattice_sites;
    if (lattice) {
      if (ni < 1) throw ConfigError("config: field 'c_grid': c must be >= 1");
      auto [lt, pts] = place_rrh_lattice(LatticeSpec{ni, 1.0}, torus.side / ni);
      lattice_sites = std::move(pts);
      torus = lt;  // identical side by construction
    }
    const int N = lattice ? 2 * ni * ni : ni;
    for (int S : (sector ? e.S_grid : std::vector<int>{1})) {
      for (int q : e.q_grid) {
        GainConfig gc;
        gc.area_ratio = e.area_ratio;
        gc.r_o = e.r_o;
        gc.N = N;
        gc.Q = e.Q;
        gc.q = q;
        gc.theta = sector ? e.theta : std::numbers::pi;
        gc.sectors = S;
        gc.sector_offset = e.sector_offset;
        gc.random_sector_offsets = e.random_sector_offsets;
        gc.rule = e.rule;
        gc.redraw_rrh = e.redraw_rrh;
        gc.balanced_groups = e.balanced_groups;
        gc.trials = e.trials;
        gc.seed = e.seed;
        if (lattice) {
          gc.fixed_rrh = &lattice_sites;
          gc.fixed_torus = &torus;
        }
        ResultRow proto;
        proto.scenario = lattice ? "lattice_rrh" : (sector ? "sectorized" : "random_random");
        proto.N = N;
        proto.q = q;
        proto.Q = e.Q;
        if (sector) {
          proto.S = S;
          proto.theta = e.theta;
        }
        gain_rows(rows, e, gc, proto);
      }
    }
  }
  return rows;
}

std::vector<ResultRow> run_lattice_users(const ExperimentConfig& e) {
  std::vector<ResultRow> rows;
  for (double beta : e.beta_grid) {
    const auto [torus, users] = place_user_lattice(LatticeSpec{e.c, beta}, e.d);
    for (int N : e.N_grid) {
      GainConfig gc;
      gc.r_o = e.r_o;
      gc.N = N;
      gc.Q = 1;  // scheduled lattice users share one pilot dimension
      gc.q = 1;
      gc.trials = e.trials;
      gc.seed = e.seed;
      gc.redraw_rrh = e.redraw_rrh;
      gc.fixed_users = &users;
      gc.fixed_torus = &torus;
      const GainResult g = measure_gain(gc);
      ResultRow r;
      r.scenario = "lattice_users";
      r.N = N;
      r.K = static_cast<double>(users.size());
      r.q = 1;
      r.Q = 1;
      r.beta = beta;
      r.metric = "gain_per_re";
      r.value = g.gain_per_re;
      r.stderr_ = g.stderr_;
      r.trials = g.trials;
      rows.push_back(r);
    }
  }
  return rows;
}

std::vector<ResultRow> run_code_efficiency(const ExperimentConfig& e) {
  std::vector<ResultRow> rows;
  for (int L : e.L_grid) {
    for (std::int64_t K : e.code_K_grid) {
      if (K < 1) throw ConfigError("config: field 'K_grid': K must be >= 1");
      ResultRow r;
      r.scenario = "code_efficiency";
      r.K = static_cast<double>(K);
      r.L = L;
      const int ell = min_ell(static_cast<std::uint64_t>(K), L);
      r.ell = ell;
      r.metric = "efficiency";
      r.value = efficiency(static_cast<std::uint64_t>(K), L);
      rows.push_back(r);
      r.metric = "min_ell";
      r.value = ell;
      rows.push_back(r);
    }
  }
  return rows;
}

std::vector<ResultRow> run_phy(const ExperimentConfig& e) {
  std::vector<ResultRow> rows;
  PhyParams p;
  p.g = 1.0;
  p.N_o = std::pow(10.0, -e.snr_db / 10.0);
  p.taps = e.taps;
  p.n_fft = e.n_fft;
  const OnOffCode code = enumerate_codewords(e.L, e.ell, static_cast<std::uint64_t>(e.code_K));
  for (int M : e.M_grid) {
    p.M = M;
    Rng rng = Rng::substream(e.seed, Stream::phy, static_cast<std::uint64_t>(M));
    const OrAgreement a = or_agreement_random_z(p, code, e.p_active, e.trials, rng);
    ResultRow r;
    r.scenario = "phy_validation";
    r.L = e.L;
    r.ell = e.ell;
    r.K = e.code_K;
    r.M = M;
    r.trials = a.trials;
    const double n_re = static_cast<double>(a.trials) * code.length();
    r.metric = "re_agreement";
    r.value = a.re_agreement;
    r.stderr_ = std::sqrt(std::max(0.0, a.re_agreement * (1.0 - a.re_agreement) / n_re));
    rows.push_back(r);
    r.metric = "decode_agreement";
    r.value = a.decode_agreement;
    r.stderr_ = std::sqrt(
        std::max(0.0, a.decode_agreement * (1.0 - a.decode_agreement) / a.trials));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& e) {
  switch (e.scenario) {
    case Scenario::random_random:
    case Scenario::sectorized:
    case Scenario::lattice_rrh:
      return run_random_like(e);
    case Scenario::lattice_users:
      return run_lattice_users(e);
    case Scenario::code_efficiency:
      return run_code_efficiency(e);
    case Scenario::phy_validation:
      return run_phy(e);
  }
  throw std::logic_error("run_experiment: unhandled scenario");
}

std::vector<ResultRow> bound_table(double area_ratio, const std::vector<double>& n_grid,
                                   int beta_points) {
  if (beta_points < 2) throw std::invalid_argument("bound_table: need >= 2 beta points");
  std::vector<double> betas(beta_points);
  const double lo = std::log(0.5), hi = std::log(2.0);
  for (int i = 0; i < beta_points; ++i)
    betas[i] = std::exp(lo + (hi - lo) * i / (beta_points - 1));
  betas.front() = 0.5;
  betas.back() = 2.0;

  std::vector<ResultRow> rows;
  ResultRow r;
  r.scenario = "bound";
  r.metric = "m_max";
  r.value = m_max(area_ratio);
  rows.push_back(r);
  for (double n : n_grid) {
    const auto [m, beta_star] = lattice_bound({area_ratio, n, betas});
    ResultRow b;
    b.scenario = "bound";
    b.N = n;
    b.beta = beta_star;
    b.metric = "m_star_lu1";
    b.value = m;
    rows.push_back(b);
  }
  return rows;
}

}  // namespace rrhmux

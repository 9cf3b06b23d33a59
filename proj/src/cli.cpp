// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "rrhmux/bounds.hpp"
#include "rrhmux/experiment.hpp"
#include "rrhmux/phy.hpp"
#include "rrhmux/pilotcode.hpp"

namespace rrhmux {

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("RRHMUX_SEED");
  if (!s || !*s) return std::nullopt;
  std::uint64_t v = 0;
  const auto res = std::from_chars(s, s + std::string_view(s).size(), v);
  if (res.ec != std::errc{} || *res.ptr != '\0')
    throw ConfigError("RRHMUX_SEED: invalid unsigned integer '" + std::string(s) + "'");
  return v;
}

void write_rows(std::vector<ResultRow> rows, const std::string& path, std::ostream& out) {
  if (path.empty())
    emit_csv(std::move(rows), out);
  else
    emit_csv(std::move(rows), path);
}

struct SweepOpts {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;
  bool trials_set = false;
};

int cmd_sweep(const SweepOpts& o, std::ostream& out) {
  const Config cfg = Config::parse_file(o.config);
  ExperimentConfig e = ExperimentConfig::from_config(cfg);
  if (o.seed_set)
    e.seed = o.seed;
  else if (const auto env = env_seed())
    e.seed = *env;
  if (o.trials_set) {
    if (o.trials < 1) throw ConfigError("--trials: must be >= 1");
    e.trials = o.trials;
  }
  if (!o.out.empty()) e.out = o.out;
  write_rows(run_experiment(e), e.out, out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"RRH pilot-reuse multiplexing-gain simulator"};
  app.require_subcommand(1);

  // sweep
  SweepOpts sw;
  auto* sweep = app.add_subcommand("sweep", "run an experiment config and emit CSV");
  sweep->add_option("--config", sw.config, "experiment config file")->required();
  sweep->add_option("--out", sw.out, "output CSV path (default: config 'out' or stdout)");
  sweep->add_option("--seed", sw.seed, "master seed override");
  sweep->add_option("--trials", sw.trials, "trials override");

  // bound
  double area_ratio = 10.0;
  std::vector<double> n_grid;
  int beta_points = 128;
  std::string bound_out;
  auto* bound = app.add_subcommand("bound", "analytic gain bounds");
  bound->add_option("--area-ratio", area_ratio, "A/D")->required();
  bound->add_option("--N-grid", n_grid, "site counts for the lattice bound")->delimiter(',');
  bound->add_option("--beta-points", beta_points, "beta grid resolution (default 128)");
  bound->add_option("--out", bound_out, "write CSV instead of text");

  // code
  int code_L = 0, code_ell = -1;
  std::uint64_t code_K = 0;
  auto* code = app.add_subcommand("code", "constant-weight code efficiency");
  code->add_option("--L", code_L, "ones per codeword")->required();
  code->add_option("--K", code_K, "number of users")->required();
  code->add_option("--ell", code_ell, "report a fixed ell instead of the minimum");

  // phy
  ExperimentConfig phy_cfg;
  phy_cfg.scenario = Scenario::phy_validation;
  phy_cfg.trials = 10000;
  std::string phy_out;
  std::uint64_t phy_seed = 0;
  auto* phy = app.add_subcommand("phy", "energy-detection OR-channel agreement sweep");
  phy->add_option("--M-grid", phy_cfg.M_grid, "antenna counts")->delimiter(',');
  phy->add_option("--snr-db", phy_cfg.snr_db, "g/N_o in dB");
  phy->add_option("--trials", phy_cfg.trials, "Monte Carlo trials per M");
  phy->add_option("--L", phy_cfg.L, "ones per codeword");
  phy->add_option("--ell", phy_cfg.ell, "zeros per codeword");
  phy->add_option("--K", phy_cfg.code_K, "assigned codewords");
  phy->add_option("--p-active", phy_cfg.p_active, "per-user presence probability");
  phy->add_option("--seed", phy_seed, "master seed");
  phy->add_option("--out", phy_out, "output CSV path (default stdout)");

  // decode
  int dec_L = 0, dec_ell = 0;
  std::uint64_t dec_K = 0;
  std::vector<int> present;
  std::string eps_bits;
  auto* dec = app.add_subcommand("decode", "one-shot OR-channel decode");
  dec->add_option("--L", dec_L, "ones per codeword")->required();
  dec->add_option("--ell", dec_ell, "zeros per codeword")->required();
  dec->add_option("--K", dec_K, "assigned codewords")->required();
  dec->add_option("--present", present, "1-based indices of in-proximity users")->delimiter(',');
  dec->add_option("--eps", eps_bits, "observed on-off pattern, RE 1 leftmost");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (sweep->parsed()) {
      sw.seed_set = sweep->count("--seed") > 0;
      sw.trials_set = sweep->count("--trials") > 0;
      return cmd_sweep(sw, out);
    }
    if (bound->parsed()) {
      if (!bound_out.empty()) {
        write_rows(bound_table(area_ratio, n_grid, beta_points), bound_out, out);
        return 0;
      }
      out << "m_max = " << format_double(m_max(area_ratio)) << "\n";
      for (const ResultRow& r : bound_table(area_ratio, n_grid, beta_points)) {
        if (r.metric != "m_star_lu1") continue;
        out << "m_star_lu1(N=" << format_double(*r.N) << ") = " << format_double(r.value)
            << " (beta* = " << format_double(*r.beta) << ")\n";
      }
      return 0;
    }
    if (code->parsed()) {
      if (code_ell >= 0) {
        out << "capacity = " << code_capacity(code_L, code_ell) << "\n";
        out << "efficiency = "
            << format_double(static_cast<double>(code_L) / (code_L + code_ell)) << "\n";
        return 0;
      }
      const int ell = min_ell(code_K, code_L);
      out << "min_ell = " << ell << "\n";
      out << "efficiency = " << format_double(efficiency(code_K, code_L)) << "\n";
      return 0;
    }
    if (phy->parsed()) {
      if (phy->count("--seed") > 0)
        phy_cfg.seed = phy_seed;
      else if (const auto env = env_seed())
        phy_cfg.seed = *env;
      write_rows(run_experiment(phy_cfg), phy_out, out);
      return 0;
    }
    if (dec->parsed()) {
      const OnOffCode cw = enumerate_codewords(dec_L, dec_ell, dec_K);
      if (!present.empty() && !eps_bits.empty())
        throw ConfigError("decode: give either --present or --eps, not both");
      std::uint64_t eps = 0;
      if (!eps_bits.empty()) {
        if (eps_bits.size() != static_cast<std::size_t>(cw.length()))
          throw ConfigError("decode: --eps must have L+ell bits");
        for (std::size_t n = 0; n < eps_bits.size(); ++n) {
          if (eps_bits[n] != '0' && eps_bits[n] != '1')
            throw ConfigError("decode: --eps must be a 0/1 string");
          if (eps_bits[n] == '1') eps |= 1ULL << n;
        }
      } else {
        std::vector<std::uint8_t> z(cw.codewords.size(), 0);
        for (int u : present) {
          if (u < 1 || static_cast<std::uint64_t>(u) > dec_K)
            throw ConfigError("decode: --present index out of range");
          z[u - 1] = 1;
        }
        eps = or_channel(cw, z);
      }
      if (dec_K <= 16)
        for (std::size_t k = 0; k < cw.codewords.size(); ++k)
          out << "b_" << k + 1 << " = " << codeword_string(cw, static_cast<int>(k)) << "\n";
      std::string es;
      for (int n = 0; n < cw.length(); ++n) es.push_back((eps >> n) & 1 ? '1' : '0');
      out << "eps = " << es << "\n";
      const DecodeOutcome d = decode(cw, eps);
      switch (d.kind) {
        case DecodeOutcome::Kind::empty:
          out << "outcome = empty\n";
          break;
        case DecodeOutcome::Kind::single: {
          out << "outcome = single user " << d.user_index + 1 << ", estimation REs:";
          for (int n = 0; n < cw.length(); ++n)
            if ((d.estimation_res >> n) & 1) out << ' ' << n + 1;
          out << "\n";
          break;
        }
        case DecodeOutcome::Kind::collision:
          out << "outcome = collision\n";
          break;
        case DecodeOutcome::Kind::invalid:
          out << "outcome = invalid\n";
          break;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rrhmux

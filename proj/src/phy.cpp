// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/phy.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace rrhmux {

namespace {

void validate(const PhyParams& p) {
  if (p.M < 1) throw std::invalid_argument("phy: M must be >= 1");
  if (!(p.g > 0.0)) throw std::invalid_argument("phy: g must be > 0");
  if (!(p.N_o > 0.0)) throw std::invalid_argument("phy: N_o must be > 0");
  if (p.taps < 1) throw std::invalid_argument("phy: taps must be >= 1");
  if (p.n_fft < 1) throw std::invalid_argument("phy: n_fft must be >= 1");
}

std::vector<double> resolve_taps(const PhyParams& p, double gain) {
  if (p.tap_powers.empty())
    return std::vector<double>(p.taps, gain / p.taps);
  if (static_cast<int>(p.tap_powers.size()) != p.taps)
    throw std::invalid_argument("phy: tap_powers size must equal taps");
  double sum = 0.0;
  for (double r : p.tap_powers) {
    if (r < 0.0) throw std::invalid_argument("phy: tap powers must be >= 0");
    sum += r;
  }
  if (std::abs(sum - p.g) > 1e-9 * p.g)
    throw std::invalid_argument("phy: tap powers must sum to g");
  // scale for users whose large-scale gain differs from g (only 0 arises here)
  std::vector<double> rho = p.tap_powers;
  if (gain != p.g)
    for (double& r : rho) r *= gain / p.g;
  return rho;
}

}  // namespace

Eigen::VectorXcd gen_channel_flat(const PhyParams& p, double gain, Rng& rng) {
  validate(p);
  Eigen::VectorXcd h = Eigen::VectorXcd::Zero(p.M);
  if (gain == 0.0) return h;
  for (int i = 0; i < p.M; ++i) h(i) = rng.cnormal(gain);
  return h;
}

Eigen::VectorXcd gen_channel_taps(const PhyParams& p, double gain, int tone_n, Rng& rng) {
  validate(p);
  if (tone_n < 0 || tone_n >= p.n_fft)
    throw std::invalid_argument("phy: tone index out of range");
  Eigen::VectorXcd h = Eigen::VectorXcd::Zero(p.M);
  if (gain == 0.0) return h;
  const std::vector<double> rho = resolve_taps(p, gain);
  for (int tau = 0; tau < p.taps; ++tau) {
    const double phase = -2.0 * std::numbers::pi * tone_n * tau / p.n_fft;
    const std::complex<double> w{std::cos(phase), std::sin(phase)};
    for (int i = 0; i < p.M; ++i) h(i) += w * rng.cnormal(rho[tau]);
  }
  return h;
}

PhyObservation received_pilot_re(const PhyParams& p, const std::vector<std::uint8_t>& bits,
                                 const std::vector<std::uint8_t>& z, Rng& rng) {
  validate(p);
  if (bits.size() != z.size())
    throw std::invalid_argument("phy: |bits| must equal |z|");
  PhyObservation obs;
  obs.y = Eigen::VectorXcd::Zero(p.M);
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (bits[k] && z[k]) obs.y += gen_channel_flat(p, p.g, rng);
  for (int i = 0; i < p.M; ++i) obs.y(i) += rng.cnormal(p.N_o);
  obs.energy = obs.y.squaredNorm() / p.M;
  return obs;
}

namespace {

// Shared agreement loop. draw_z(rng) fills z each trial (or leaves it fixed).
template <class DrawZ>
OrAgreement agreement_loop(const PhyParams& p, const OnOffCode& code, int trials,
                           Rng& rng, std::vector<std::uint8_t> z, DrawZ&& draw_z) {
  validate(p);
  if (trials < 1) throw std::invalid_argument("phy: trials must be >= 1");
  const int n_re = code.length();
  const std::uint64_t base = rng.next_u64();
  long re_ok = 0, decode_ok = 0;
  for (int t = 0; t < trials; ++t) {
    Rng tr = Rng::substream(base, Stream::phy, 0, static_cast<std::uint64_t>(t));
    draw_z(z, tr);
    const std::uint64_t eps = or_channel(code, z);
    std::uint64_t eps_hat = 0;
    for (int n = 0; n < n_re; ++n) {
      int present = 0;
      for (std::size_t k = 0; k < z.size(); ++k)
        if (z[k] && ((code.codewords[k] >> n) & 1)) ++present;
      // superposed i.i.d. flat channels: per-antenna CN(0, present*g + N_o)
      const double var = present * p.g + p.N_o;
      double acc = 0.0;
      for (int i = 0; i < p.M; ++i) acc += std::norm(tr.cnormal(var));
      const double energy = acc / p.M;
      const bool hat = detect(p, energy);
      if (hat == (((eps >> n) & 1) != 0)) ++re_ok;
      if (hat) eps_hat |= 1ULL << n;
    }
    if (decode(code, eps_hat) == decode(code, eps)) ++decode_ok;
  }
  OrAgreement out;
  out.trials = trials;
  out.re_agreement = static_cast<double>(re_ok) / (static_cast<double>(trials) * n_re);
  out.decode_agreement = static_cast<double>(decode_ok) / trials;
  return out;
}

}  // namespace

OrAgreement or_agreement(const PhyParams& p, const OnOffCode& code,
                         const std::vector<std::uint8_t>& z, int trials, Rng& rng) {
  if (z.size() != code.codewords.size())
    throw std::invalid_argument("phy: |z| must equal the number of codewords");
  return agreement_loop(p, code, trials, rng, z,
                        [](std::vector<std::uint8_t>&, Rng&) {});
}

OrAgreement or_agreement_random_z(const PhyParams& p, const OnOffCode& code,
                                  double p_active, int trials, Rng& rng) {
  if (!(p_active >= 0.0 && p_active <= 1.0))
    throw std::invalid_argument("phy: p_active must lie in [0, 1]");
  std::vector<std::uint8_t> z(code.codewords.size(), 0);
  return agreement_loop(p, code, trials, rng, z,
                        [p_active](std::vector<std::uint8_t>& zz, Rng& tr) {
                          for (auto& b : zz) b = tr.uniform() < p_active ? 1 : 0;
                        });
}

}  // namespace rrhmux

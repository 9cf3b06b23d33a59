// SPDX-License-Identifier: Apache-2.0
// Physical-layer validation of the OR-channel abstraction: Gaussian channels
// (flat or multipath-tap), pilot superposition, per-antenna energy estimates,
// and threshold detection. Pilot energy is normalized to gamma_p = 1, so the
// noise floor is N_o and g/N_o is the SNR knob.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rrhmux/pilotcode.hpp"
#include "rrhmux/rng.hpp"

namespace rrhmux {

struct PhyParams {
  int M = 64;            // antennas
  double g = 1.0;        // large-scale gain of in-proximity users
  double N_o = 0.1;      // noise power
  int taps = 1;          // multipath length; 1 = flat
  int n_fft = 64;        // OFDM size for the tap model
  std::vector<double> tap_powers;  // per-tap rho; empty -> uniform g/taps

  double threshold() const { return 0.5 * g + N_o; }
};

// i.i.d. CN(0, gain) entries; draw order: (re, im) per antenna, ascending.
// gain == 0 returns zeros without consuming draws.
Eigen::VectorXcd gen_channel_flat(const PhyParams& p, double gain, Rng& rng);

// tone response h[n] = sum_tau h_tau * exp(-j 2 pi n tau / n_fft) with
// independent CN(0, rho_tau) taps; per-tone variance sums to `gain`.
// Draw order: taps ascending, (re, im) per antenna within each tap.
Eigen::VectorXcd gen_channel_taps(const PhyParams& p, double gain, int tone_n, Rng& rng);

struct PhyObservation {
  Eigen::VectorXcd y;
  double energy = 0.0;  // ||y||^2 / M
};

// one pilot RE: y = sum_k bits[k] z[k] h_k + w, w ~ CN(0, N_o I),
// per-user gain g_k = z_k * g (flat channels)
PhyObservation received_pilot_re(const PhyParams& p, const std::vector<std::uint8_t>& bits,
                                 const std::vector<std::uint8_t>& z, Rng& rng);

// strict energy test against Gamma = 0.5 g + N_o
inline bool detect(const PhyParams& p, double energy) { return energy > p.threshold(); }

struct OrAgreement {
  double re_agreement = 0.0;      // fraction of (trial, RE) pairs with eps_hat == eps
  double decode_agreement = 0.0;  // fraction of trials whose decode outcome matches
  long trials = 0;
};

// Monte Carlo agreement between threshold detection and the ideal OR channel
// for a fixed proximity vector z. Trial-substream parallel-safe: the caller's
// rng seeds per-trial streams.
OrAgreement or_agreement(const PhyParams& p, const OnOffCode& code,
                         const std::vector<std::uint8_t>& z, int trials, Rng& rng);

// same, but z is redrawn per trial with i.i.d. Bernoulli(p_active) entries
OrAgreement or_agreement_random_z(const PhyParams& p, const OnOffCode& code,
                                  double p_active, int trials, Rng& rng);

}  // namespace rrhmux

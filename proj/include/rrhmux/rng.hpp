// SPDX-License-Identifier: Apache-2.0
// Deterministic substream RNG: a master seed plus (purpose, tag, trial) derives
// an independent stream, so trials are bitwise reproducible in any execution order.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace rrhmux {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream purposes; values are part of the reproducibility contract.
enum class Stream : std::uint64_t {
  rrh_placement = 1,
  user_placement = 2,
  sector_offsets = 3,
  phy = 4,
  misc = 5,
};

inline std::uint64_t derive_seed(std::uint64_t master, Stream purpose,
                                 std::uint64_t tag, std::uint64_t trial) {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ static_cast<std::uint64_t>(purpose));
  s = splitmix64(s ^ tag);
  s = splitmix64(s ^ trial);
  return s;
}

// mt19937_64 with hand-rolled transforms (uniform doubles, polar-method
// normals, Lemire bounded ints) so sequences do not depend on the C++
// library's unspecified distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng substream(std::uint64_t master, Stream purpose,
                       std::uint64_t tag = 0, std::uint64_t trial = 0) {
    return Rng(derive_seed(master, purpose, tag, trial));
  }

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n), Lemire's multiply-shift rejection
  std::uint64_t bounded(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t t = (0 - n) % n;
      while (lo < t) {
        m = static_cast<unsigned __int128>(next_u64()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // standard normal, Marsaglia polar method with one cached spare
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // circularly-symmetric complex normal with total variance `var`
  std::complex<double> cnormal(double var) {
    const double s = std::sqrt(0.5 * var);
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rrhmux

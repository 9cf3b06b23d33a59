// SPDX-License-Identifier: Apache-2.0
// Constant-weight on-off pilot codes, OR-channel model, and the proximity
// decoder. Codewords are uint64 bitmasks; bit (n-1) is pilot RE n.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rrhmux {

struct OnOffCode {
  int L = 0;    // ones per codeword (channel-estimation REs)
  int ell = 0;  // zeros per codeword
  int length() const { return L + ell; }
  std::uint64_t full_mask() const {
    const int n = length();
    return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
  }
  std::vector<std::uint64_t> codewords;
};

struct DecodeOutcome {
  enum class Kind { empty, single, collision, invalid };
  Kind kind = Kind::invalid;
  int user_index = -1;              // set for single
  std::uint64_t estimation_res = 0;  // the detected user's L one-positions
  friend bool operator==(const DecodeOutcome&, const DecodeOutcome&) = default;
};

// C(L+ell, ell), saturating at uint64 max
std::uint64_t code_capacity(int L, int ell);

// first K weight-L codewords of length L+ell, in lexicographic order of their
// zero-position sets; requires L+ell <= 64 and 1 <= K <= capacity
OnOffCode enumerate_codewords(int L, int ell, std::uint64_t K);

// elementwise OR of the codewords of present users (z[k] != 0)
std::uint64_t or_channel(const OnOffCode& code, const std::vector<std::uint8_t>& z);

// all-zero -> empty; exactly ell zeros matching an assigned codeword ->
// single; fewer than ell zeros -> collision; anything else -> invalid
DecodeOutcome decode(const OnOffCode& code, std::uint64_t eps);

// smallest ell >= 1 with C(L+ell, ell) >= K; 0 iff K == 1
int min_ell(std::uint64_t K, int L);

// eta*(K; L) = 1 if K == 1, else L / (L + min_ell(K, L))
double efficiency(std::uint64_t K, int L);

inline double net_gain(double m, std::uint64_t K, int L) {
  return m * efficiency(K, L);
}

// "0"/"1" string, RE 1 leftmost
std::string codeword_string(const OnOffCode& code, int k);

}  // namespace rrhmux

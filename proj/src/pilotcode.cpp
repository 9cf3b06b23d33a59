// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/pilotcode.hpp"

#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rrhmux {

std::uint64_t code_capacity(int L, int ell) {
  if (L < 1 || ell < 0) throw std::invalid_argument("code_capacity: need L >= 1, ell >= 0");
  unsigned __int128 r = 1;
  for (int i = 1; i <= ell; ++i) {
    r = r * static_cast<unsigned>(L + i) / static_cast<unsigned>(i);  // exact: C(L+i, i)
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

OnOffCode enumerate_codewords(int L, int ell, std::uint64_t K) {
  if (L < 1) throw std::invalid_argument("enumerate_codewords: L must be >= 1");
  if (ell < 0) throw std::invalid_argument("enumerate_codewords: ell must be >= 0");
  if (ell == 0 && K != 1)
    throw std::invalid_argument("enumerate_codewords: ell = 0 is only valid for K = 1");
  if (L + ell > 64) throw std::invalid_argument("enumerate_codewords: L + ell exceeds 64");
  if (K < 1) throw std::invalid_argument("enumerate_codewords: K must be >= 1");
  if (K > code_capacity(L, ell))
    throw std::invalid_argument("enumerate_codewords: K exceeds capacity C(L+ell, ell)");

  OnOffCode code;
  code.L = L;
  code.ell = ell;
  const int n = L + ell;
  const std::uint64_t full = code.full_mask();
  std::vector<int> zeros(ell);
  std::iota(zeros.begin(), zeros.end(), 0);  // 0-based zero positions
  for (std::uint64_t k = 0; k < K; ++k) {
    std::uint64_t zmask = 0;
    for (int p : zeros) zmask |= 1ULL << p;
    code.codewords.push_back(full ^ zmask);
    // next ell-combination of {0..n-1} in lexicographic order
    int i = ell - 1;
    while (i >= 0 && zeros[i] == n - ell + i) --i;
    if (i < 0) break;  // k == K-1 == capacity-1
    ++zeros[i];
    for (int j = i + 1; j < ell; ++j) zeros[j] = zeros[j - 1] + 1;
  }
  return code;
}

std::uint64_t or_channel(const OnOffCode& code, const std::vector<std::uint8_t>& z) {
  if (z.size() != code.codewords.size())
    throw std::invalid_argument("or_channel: |z| must equal the number of codewords");
  std::uint64_t eps = 0;
  for (std::size_t k = 0; k < z.size(); ++k)
    if (z[k]) eps |= code.codewords[k];
  return eps;
}

DecodeOutcome decode(const OnOffCode& code, std::uint64_t eps) {
  const std::uint64_t full = code.full_mask();
  if (eps & ~full) throw std::invalid_argument("decode: eps wider than the code length");
  if (eps == 0) return {DecodeOutcome::Kind::empty, -1, 0};
  const int zeros = std::popcount(full & ~eps);
  if (zeros < code.ell) return {DecodeOutcome::Kind::collision, -1, 0};
  if (zeros == code.ell) {
    for (std::size_t k = 0; k < code.codewords.size(); ++k)
      if (code.codewords[k] == eps)
        return {DecodeOutcome::Kind::single, static_cast<int>(k), eps};
  }
  return {DecodeOutcome::Kind::invalid, -1, 0};
}

int min_ell(std::uint64_t K, int L) {
  if (K < 1) throw std::invalid_argument("min_ell: K must be >= 1");
  if (L < 1) throw std::invalid_argument("min_ell: L must be >= 1");
  if (K == 1) return 0;
  for (int ell = 1;; ++ell)
    if (code_capacity(L, ell) >= K) return ell;
}

double efficiency(std::uint64_t K, int L) {
  if (K == 1) return 1.0;
  return static_cast<double>(L) / (L + min_ell(K, L));
}

std::string codeword_string(const OnOffCode& code, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= code.codewords.size())
    throw std::invalid_argument("codeword_string: index out of range");
  std::string s;
  for (int n = 0; n < code.length(); ++n)
    s.push_back((code.codewords[k] >> n) & 1 ? '1' : '0');
  return s;
}

}  // namespace rrhmux

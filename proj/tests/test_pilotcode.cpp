// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "rrhmux/pilotcode.hpp"

using namespace rrhmux;

TEST_CASE("capacity is the binomial coefficient, saturating") {
  CHECK(code_capacity(5, 3) == 56);
  CHECK(code_capacity(5, 1) == 6);
  CHECK(code_capacity(2, 0) == 1);
  CHECK(code_capacity(1, 1) == 2);
  CHECK(code_capacity(30, 30) == 118264581564861424ULL);  // C(60,30)
  CHECK(code_capacity(64, 32) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("ell=1 codewords walk the zero down the word") {
  const auto code = enumerate_codewords(5, 1, 6);
  REQUIRE(code.codewords.size() == 6);
  const std::uint64_t full = code.full_mask();
  for (int k = 0; k < 6; ++k)
    CHECK(code.codewords[k] == (full ^ (1ULL << k)));  // zero at RE k+1
  CHECK(codeword_string(code, 0) == "011111");
  CHECK(codeword_string(code, 5) == "111110");
}

TEST_CASE("zero-position sets come out in lexicographic order") {
  const auto code = enumerate_codewords(3, 2, 10);  // C(5,2) = 10
  std::vector<std::vector<int>> zero_sets;
  for (const auto w : code.codewords) {
    std::vector<int> zs;
    for (int n = 0; n < code.length(); ++n)
      if (!(w >> n & 1)) zs.push_back(n);
    CHECK(zs.size() == 2);
    zero_sets.push_back(zs);
  }
  for (std::size_t i = 1; i < zero_sets.size(); ++i)
    CHECK(zero_sets[i - 1] < zero_sets[i]);
  // all distinct, all weight L
  std::set<std::uint64_t> uniq(code.codewords.begin(), code.codewords.end());
  CHECK(uniq.size() == 10);
  for (const auto w : code.codewords) CHECK(std::popcount(w) == 3);
}

TEST_CASE("L=5 ell=3 reference pair and their OR") {
  const auto code = enumerate_codewords(5, 3, 56);
  // the two words with zero sets {2,3,5} and {0,1,5} (0-based REs)
  const std::uint64_t c1 = 0b11010011;  // "11001011" RE1..8
  const std::uint64_t c2 = 0b11011100;
  bool saw1 = false, saw2 = false;
  for (const auto w : code.codewords) {
    saw1 |= (w == c1);
    saw2 |= (w == c2);
  }
  CHECK(saw1);
  CHECK(saw2);
  CHECK((c1 | c2) == 0b11011111);
  CHECK(decode(code, c1 | c2).kind == DecodeOutcome::Kind::collision);
}

TEST_CASE("decode outcomes") {
  const auto code = enumerate_codewords(5, 3, 56);
  SUBCASE("empty") {
    const auto out = decode(code, 0);
    CHECK(out.kind == DecodeOutcome::Kind::empty);
  }
  SUBCASE("single reproduces the codeword and index") {
    for (int k : {0, 7, 55}) {
      const auto out = decode(code, code.codewords[k]);
      CHECK(out.kind == DecodeOutcome::Kind::single);
      CHECK(out.user_index == k);
      CHECK(out.estimation_res == code.codewords[k]);
    }
  }
  SUBCASE("fewer zeros than ell is a collision") {
    const auto out = decode(code, code.full_mask());
    CHECK(out.kind == DecodeOutcome::Kind::collision);
  }
  SUBCASE("ell zeros but unassigned word is invalid") {
    // with K < capacity, a valid-weight word outside the book decodes invalid
    const auto small = enumerate_codewords(5, 3, 4);
    const auto all = enumerate_codewords(5, 3, 56);
    const auto out = decode(small, all.codewords[50]);
    CHECK(out.kind == DecodeOutcome::Kind::invalid);
  }
  SUBCASE("more zeros than ell is invalid") {
    const auto out = decode(code, 0b00000001);
    CHECK(out.kind == DecodeOutcome::Kind::invalid);
  }
  SUBCASE("bits outside the word length throw") {
    CHECK_THROWS_AS((void)decode(code, 1ULL << 60), std::invalid_argument);
  }
}

TEST_CASE("exhaustive OR-channel decode oracle on small books") {
  for (int L = 1; L <= 6; ++L) {
    for (int ell = 1; ell <= 3; ++ell) {
      const std::uint64_t cap = code_capacity(L, ell);
      const std::uint64_t K = cap < 12 ? cap : 12;
      const auto code = enumerate_codewords(L, ell, K);
      for (std::uint64_t mask = 0; mask < (1ULL << K); ++mask) {
        std::vector<std::uint8_t> z(K, 0);
        int weight = 0;
        int who = -1;
        for (std::uint64_t k = 0; k < K; ++k)
          if (mask >> k & 1) {
            z[k] = 1;
            ++weight;
            who = static_cast<int>(k);
          }
        const auto out = decode(code, or_channel(code, z));
        if (weight == 0) {
          CHECK(out.kind == DecodeOutcome::Kind::empty);
        } else if (weight == 1) {
          REQUIRE(out.kind == DecodeOutcome::Kind::single);
          CHECK(out.user_index == who);
          CHECK(out.estimation_res == code.codewords[who]);
        } else {
          CHECK(out.kind == DecodeOutcome::Kind::collision);
        }
      }
    }
  }
}

TEST_CASE("any two codewords OR to weight > L") {
  for (int L : {2, 5}) {
    for (int ell : {1, 2, 3}) {
      const std::uint64_t cap = code_capacity(L, ell);
      const auto code = enumerate_codewords(L, ell, cap);
      for (std::size_t i = 0; i < code.codewords.size(); ++i)
        for (std::size_t j = i + 1; j < code.codewords.size(); ++j)
          CHECK(std::popcount(code.codewords[i] | code.codewords[j]) > L);
    }
  }
}

TEST_CASE("enumerate_codewords input validation") {
  CHECK_THROWS_AS((void)enumerate_codewords(5, 3, 57), std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_codewords(5, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_codewords(0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_codewords(40, 25, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_codewords(5, 0, 2), std::invalid_argument);
  CHECK_NOTHROW((void)enumerate_codewords(5, 0, 1));  // lone user needs no zeros
}

TEST_CASE("min_ell and efficiency reference values") {
  CHECK(min_ell(1, 5) == 0);
  CHECK(min_ell(6, 5) == 1);
  CHECK(min_ell(7, 5) == 2);
  CHECK(min_ell(10, 5) == 2);
  CHECK(min_ell(56, 5) == 3);
  CHECK(min_ell(57, 5) == 4);
  CHECK(efficiency(1, 5) == 1.0);
  CHECK(efficiency(6, 5) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(efficiency(10, 5) == doctest::Approx(0.7142857142857143).epsilon(1e-15));
  CHECK(net_gain(20.0, 10, 5) == doctest::Approx(14.285714285714286).epsilon(1e-15));
}

TEST_CASE("efficiency monotonicity") {
  for (int L : {2, 5, 16}) {
    double prev = 2.0;
    for (std::uint64_t K = 1; K <= 2000; ++K) {
      const double e = efficiency(K, L);
      CHECK(e <= prev + 1e-15);
      CHECK(e > 0.0);
      CHECK(e <= 1.0);
      prev = e;
    }
  }
  // more estimation REs never hurt at fixed K
  for (std::uint64_t K : {2ULL, 17ULL, 999ULL}) {
    double prev = 0.0;
    for (int L : {2, 4, 8, 16, 32, 64}) {
      const double e = efficiency(K, L);
      CHECK(e >= prev - 1e-15);
      prev = e;
    }
  }
}

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "lucaslcm/arith.hpp"
#include "lucaslcm/index_sets.hpp"

using namespace lucaslcm;

namespace {
std::vector<uint64_t> vec(std::initializer_list<uint64_t> xs) { return xs; }
}  // namespace

TEST_CASE("SignPattern parsing and accessors") {
  const SignPattern s("--++");
  CHECK(s.period() == 4);
  CHECK(s.word() == "--++");
  CHECK(s.sign(1) == -1);
  CHECK(s.sign(2) == -1);
  CHECK(s.sign(3) == +1);
  CHECK(s.sign(4) == +1);
  CHECK(s.sign(5) == -1);  // wraps
  CHECK(s.sign(4 + 4 * 1000) == +1);

  CHECK(SignPattern("-").minimal_period() == 1);
  CHECK(SignPattern("--").minimal_period() == 1);
  CHECK(SignPattern("-+-+").minimal_period() == 2);
  CHECK(SignPattern("--++").minimal_period() == 4);
  CHECK(SignPattern("+-+").minimal_period() == 3);

  CHECK_THROWS_AS(SignPattern(""), std::invalid_argument);
  CHECK_THROWS_AS(SignPattern("+x+"), std::invalid_argument);
  CHECK_THROWS_AS(SignPattern("01"), std::invalid_argument);
}

TEST_CASE("divisor_set examples and generic multipliers") {
  CHECK(divisor_set(1, 6) == vec({1, 2, 3, 6}));
  CHECK(divisor_set(2, 3) == vec({2, 6}));
  CHECK(divisor_set(6, 1) == vec({6}));
  CHECK(divisor_set(3, 2) == vec({3, 6}));
  CHECK(divisor_set(6, 4) == vec({24}));  // E_-(8), the L_8 - 1 = Phi_24 case

  // D_1(n) is the plain divisor list.
  for (uint64_t n = 1; n <= 100; ++n) {
    std::vector<uint64_t> divs;
    for (uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) divs.push_back(d);
    }
    REQUIRE(divisor_set(1, n) == divs);
  }

  // Definition check for a composite multiplier (a = 10 exercises the
  // generic-a path used by the Lemma 8 identity).
  for (uint64_t n = 1; n <= 60; ++n) {
    for (uint64_t a : {2, 3, 6, 10, 15}) {
      std::vector<uint64_t> brute;
      for (uint64_t d = 1; d <= a * n; ++d) {
        if ((a * n) % d == 0 && std::gcd(a * n / d, a) == 1) brute.push_back(d);
      }
      REQUIRE(divisor_set(a, n) == brute);
    }
  }
}

TEST_CASE("Lemma 8 set identity, spot checks") {
  // D_ap(n) = D_a(pn) \ D_a(n); the verify suite runs the full grid.
  for (uint64_t n : {1, 2, 5, 12, 30, 77}) {
    for (const auto& [a, p] : std::vector<std::pair<uint64_t, uint64_t>>{
             {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 2}, {3, 5}}) {
      const auto lhs = divisor_set(a * p, n);
      const auto big = divisor_set(a, p * n);
      const auto small = divisor_set(a, n);
      std::vector<uint64_t> diff;
      std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                          std::back_inserter(diff));
      REQUIRE(lhs == diff);
    }
  }
}

TEST_CASE("shifted_support eight-case table") {
  const auto em5 = shifted_support(5, -1);
  CHECK(em5.scalar == 5);
  CHECK(em5.indices == vec({1, 2, 3}));

  const auto ep4 = shifted_support(4, +1);
  CHECK(ep4.scalar == 1);
  CHECK(ep4.indices == vec({3, 6}));

  const auto em6 = shifted_support(6, -1);
  CHECK(em6.scalar == 1);
  CHECK(em6.indices == vec({9}));

  CHECK_THROWS_AS(shifted_support(3, -1), std::invalid_argument);

  // scalar is 5 exactly for n = 1 (mod 4) with s = -1 and n = 3 (mod 4)
  // with s = +1; indices stay within [1, 3n].
  for (uint64_t n = 4; n <= 100; ++n) {
    for (int s : {-1, +1}) {
      const auto sup = shifted_support(n, s);
      const bool five = (n % 4 == 1 && s == -1) || (n % 4 == 3 && s == +1);
      REQUIRE(sup.scalar == (five ? 5u : 1u));
      REQUIRE(!sup.indices.empty());
      REQUIRE(sup.indices.back() <= 3 * n);
      REQUIRE(std::is_sorted(sup.indices.begin(), sup.indices.end()));
    }
  }
}

TEST_CASE("k_membership conditions") {
  const SignPattern minus("-");
  CHECK(k_membership(3, 1, minus));         // s_2 = -1 = (-1)^1
  CHECK_FALSE(k_membership(3, 2, minus));   // s_4 = -1 != (-1)^2
  for (uint64_t h = 1; h <= 40; ++h) {
    REQUIRE(k_membership(1, h, minus));     // one parity always matches
  }
  CHECK_THROWS_AS(k_membership(4, 1, minus), std::invalid_argument);
}

TEST_CASE("k_membership is 2m-periodic for every pattern with m <= 6") {
  std::vector<std::string> words = {""};
  for (uint32_t len = 1; len <= 6; ++len) {
    std::vector<std::string> next;
    for (uint64_t bits = 0; bits < (uint64_t{1} << len); ++bits) {
      std::string w(len, '-');
      for (uint32_t i = 0; i < len; ++i) {
        if ((bits >> i) & 1) w[i] = '+';
      }
      next.push_back(w);
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  words.erase(words.begin());  // drop the empty seed
  REQUIRE(words.size() == 126);

  for (const std::string& w : words) {
    const SignPattern s(w);
    const uint64_t two_m = 2 * s.period();
    for (uint32_t a : kIndexClasses) {
      for (uint64_t h = 1; h <= 200; ++h) {
        REQUIRE(k_membership(a, h, s) == k_membership(a, h + two_m, s));
      }
    }
  }
}

TEST_CASE("k_residues") {
  const SignPattern minus("-");
  CHECK(k_residues(3, minus) == std::vector<uint32_t>{1});
  CHECK(k_residues(1, minus) == std::vector<uint32_t>({1, 2}));
  CHECK(k_residues(6, SignPattern("+-")) == std::vector<uint32_t>({2, 4}));

  // residues are exactly the members of [1, 2m]
  for (const std::string w : {"-", "+", "-+", "--++", "+-+", "+++++-"}) {
    const SignPattern s(w);
    for (uint32_t a : kIndexClasses) {
      std::vector<uint32_t> brute;
      for (uint32_t h = 1; h <= 2 * s.period(); ++h) {
        if (k_membership(a, h, s)) brute.push_back(h);
      }
      REQUIRE(k_residues(a, s) == brute);
    }
  }
}

TEST_CASE("shifted_union_set enumeration") {
  const SignPattern minus("-");
  const auto set8 = shifted_union_set(8, minus);
  CHECK(set8 == std::vector<uint32_t>({1, 2, 3, 4, 6, 8, 9, 12, 24}));
  uint64_t phi_sum = 0;
  for (uint32_t d : set8) phi_sum += euler_phi(d);
  CHECK(phi_sum == 30);

  CHECK_THROWS_AS(shifted_union_set(3, minus), std::invalid_argument);

  for (const std::string w : {"-", "+", "-+", "--++"}) {
    const SignPattern s(w);
    for (uint32_t n = 4; n <= 80; ++n) {
      const auto set = shifted_union_set(n, s);
      REQUIRE(std::is_sorted(set.begin(), set.end()));
      REQUIRE(set.back() <= 3 * n);
    }
  }
}

TEST_CASE("union_contains agrees with the enumeration") {
  for (const std::string w : {"-", "+", "-+", "--++", "+-", "+++++-"}) {
    const SignPattern s(w);
    for (uint32_t n : {4, 9, 16, 37, 60, 97}) {
      const auto set = shifted_union_set(n, s);
      const std::set<uint32_t> members(set.begin(), set.end());
      for (uint32_t d = 1; d <= 3 * n + 5; ++d) {
        REQUIRE(union_contains(d, n, s) == (members.count(d) > 0));
      }
    }
  }
}

TEST_CASE("union_phi_sum equals the explicit sum") {
  const TotientTable table(3 * 500);
  for (const std::string w : {"-", "--++", "+"}) {
    const SignPattern s(w);
    for (uint32_t n : {4, 17, 100, 500}) {
      uint64_t manual = 0;
      for (uint32_t d : shifted_union_set(n, s)) manual += euler_phi(d);
      REQUIRE(union_phi_sum(n, s, table) == manual);
      REQUIRE(union_phi_sum_serial(n, s, table) == manual);
    }
  }
}

TEST_CASE("h_count examples and rational cutoffs") {
  CHECK(h_count(2, 4, ExactRational(10)) == 3);   // {2, 6, 10}
  CHECK(h_count(2, 3, ExactRational(10)) == 0);   // a does not divide d
  CHECK(h_count(1, 5, ExactRational(12)) == 2);   // {5, 10}
  CHECK(h_count(1, 5, make_rational(11, 2)) == 1);  // floor(11/10)
  CHECK(h_count(6, 6, ExactRational(10)) == 3);   // v in {1, 5, 7}
  CHECK(h_count(3, 6, make_rational(-1, 2)) == 0);
}

TEST_CASE("p_exponent examples") {
  CHECK(p_exponent(5, 20) == 4);
  CHECK(p_exponent(12, 24) == 8);
  CHECK(p_exponent(2, 10) == 10);
  CHECK(p_exponent(1, 7) == 6);
  CHECK(p_exponent(3, 9) == 5);  // floor(27/6) + floor(9/6)
  // consistency with the weighted H-counts at one point (suite runs the grid)
  const uint64_t d = 24, n = 100;
  const ExactRational half_n = make_rational(100, 2);
  CHECK(p_exponent(d, n) == 2 * h_count(1, d, half_n) + 2 * h_count(2, d, half_n) +
                                h_count(3, d, half_n) + h_count(6, d, half_n));
}

// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helmax/exponents.hpp"
#include "region_scan_oracle.hpp"

using helmax::LebesgueExponent;
using helmax::Rational;

namespace {
LebesgueExponent lp(std::int64_t num, std::int64_t den = 1) {
  return LebesgueExponent(Rational(num, den));
}
}  // namespace

TEST_CASE("rational arithmetic basics", "[exponents]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(7, 3) * Rational(3, 7) == Rational(1));
  CHECK(Rational::parse("4/3") == Rational(4, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX, 1) * Rational(3), std::overflow_error);
}

TEST_CASE("lebesgue exponent parsing and ordering", "[exponents]") {
  CHECK(LebesgueExponent::parse("inf").is_infinite());
  CHECK(LebesgueExponent::parse("4/3").reciprocal() == Rational(3, 4));
  CHECK(lp(2) < LebesgueExponent::infinity());
  CHECK(lp(4, 3) < lp(2));
  CHECK_THROWS_AS(LebesgueExponent(Rational(1, 2)), std::domain_error);
}

TEST_CASE("gutierrez region examples", "[exponents]") {
  CHECK(helmax::check_gutierrez(lp(4, 3), lp(4), 3).admissible);

  auto bad = helmax::check_gutierrez(lp(2), lp(2), 3);
  CHECK_FALSE(bad.admissible);
  // 1/p = 1/2 <= 2/3 violates the strict lower bound on 1/p.
  bool found = false;
  for (const auto& v : bad.violations) found |= v.inequality == "1/p > (n+1)/(2n)";
  CHECK(found);

  // (2(n+1)/(n+3), 2(n+1)/(n-1)) hits the lower boundary 1/p - 1/q = 2/(n+1).
  const int n = 4;
  CHECK(helmax::check_gutierrez(lp(2 * (n + 1), n + 3), lp(2 * (n + 1), n - 1), n).admissible);
}

TEST_CASE("maxwell region examples", "[exponents]") {
  CHECK(helmax::check_maxwell_conditions(lp(6, 5), lp(2), lp(4)).admissible);
  CHECK(helmax::check_maxwell_conditions(lp(4, 3), lp(2), lp(4)).admissible);  // boundary 1/2
  CHECK_FALSE(helmax::check_maxwell_conditions(lp(2), lp(2), lp(4)).admissible);
}

TEST_CASE("compactness region examples", "[exponents]") {
  CHECK(helmax::check_compactness_conditions(lp(4), lp(4), lp(3, 2), lp(2), 3).admissible);
  CHECK_FALSE(helmax::check_compactness_conditions(lp(4), LebesgueExponent::infinity(), lp(3, 2),
                                                   lp(2), 3)
                  .admissible);
  CHECK_FALSE(helmax::check_compactness_conditions(lp(2), lp(2), lp(3, 2), lp(2), 3).admissible);
}

TEST_CASE("derivative region examples", "[exponents]") {
  CHECK(helmax::check_derivative_conditions(lp(4, 3), lp(2), lp(4), 3).admissible);
  // (1/ptilde, 1/q) = (1, 2/3) = (1, 1-1/n) is an excluded corner for n=3.
  CHECK_FALSE(helmax::check_derivative_conditions(lp(4, 3), lp(1), lp(3, 2), 3).admissible);
  CHECK(helmax::check_derivative_conditions(lp(4, 3), lp(3), lp(4), 3).admissible);
}

TEST_CASE("scaling exponent: known pairs", "[exponents]") {
  CHECK(helmax::scaling_exponent(lp(4, 3), lp(4), 3) == Rational(-1, 4));
  for (int n = 3; n <= 8; ++n) {
    CHECK(helmax::scaling_exponent(lp(2 * (n + 1), n + 3), lp(2 * (n + 1), n - 1), n) ==
          Rational(-1, n + 1));
  }
  // 1/p - 1/q = 2/n sits on the boundary and gives exponent 0.
  CHECK(helmax::scaling_exponent(lp(1), lp(3), 3) == Rational(0));
}

TEST_CASE("derivative scaling exponents", "[exponents]") {
  // Exact rational evaluation: 1/p=3/4, 1/ptilde=1/2, 1/q=1/4, n=3 gives
  // (3/2, 3/2) * ((3/4-1/4-1/3), (1/2-1/4-1/3)) = (1/4, -1/8).
  auto [s1, s2] = helmax::derivative_scaling_exponents(lp(4, 3), lp(2), lp(4), 3);
  CHECK(s1 == Rational(1, 4));
  CHECK(s2 == Rational(-1, 8));

  // 1/p - 1/q = 1/n zeroes the first component.
  auto [t1, t2] = helmax::derivative_scaling_exponents(lp(12, 7), lp(2), lp(4), 3);
  CHECK(t1 == Rational(0));

  // 1/ptilde = 1/q gives second component -1/2 for any n.
  auto [u1, u2] = helmax::derivative_scaling_exponents(lp(4, 3), lp(4), lp(4), 3);
  (void)u1;
  CHECK(u2 == Rational(-1, 2));
}

TEST_CASE("k-norm bound exponents", "[exponents]") {
  auto [s1, s2] = helmax::k_norm_bound_exponents(lp(4), lp(4), lp(3, 2), lp(2), 3);
  CHECK(s1 == Rational(0));
  CHECK(s2 == Rational(-1, 4));

  // kappa = n/2 with q1 = q2 always zeroes the first component.
  for (int n = 3; n <= 6; ++n) {
    auto q = LebesgueExponent::from_reciprocal(Rational(n - 1, 2 * n) - Rational(1, 100));
    auto [a, b] = helmax::k_norm_bound_exponents(q, q, lp(n, 2), lp(n + 1, 2), n);
    CHECK(a == Rational(0));
    CHECK(b == Rational(-1, n + 1));
  }

  CHECK_THROWS_AS(helmax::k_norm_bound_exponents(lp(2), lp(2), lp(3, 2), lp(2), 3),
                  helmax::AdmissibilityError);
}

TEST_CASE("bootstrap sequence recurrence", "[exponents]") {
  // n=3, kappa~=7/4, q0=4: 1/q1 = min{(1/4+1/3)/2, 1/4-1/2+4/7} = 7/24.
  auto seq = helmax::bootstrap_sequence(lp(4), lp(7, 4), 3, 4);
  REQUIRE(seq.size() == 5);
  CHECK(seq[1].reciprocal() == Rational(7, 24));

  // Limiting case kappa~ = 2 = (n+1)/2 uses increment 2/n - 2/(n+1).
  auto lim = helmax::bootstrap_sequence(lp(4), lp(2), 3, 1);
  CHECK(lim[1].reciprocal() == Rational(7, 24));

  // Reciprocals increase strictly and stay below (n-1)/(2n).
  for (int n : {3, 4, 5}) {
    auto q0 = LebesgueExponent::from_reciprocal(Rational(n - 1, 2 * n) - Rational(1, 30));
    auto s = helmax::bootstrap_sequence(q0, lp(n + 1, 2), n, 12);
    const Rational limit(n - 1, 2 * n);
    for (std::size_t j = 1; j < s.size(); ++j) {
      CHECK(s[j - 1].reciprocal() < s[j].reciprocal());
      CHECK(s[j].reciprocal() < limit);
    }
  }

  CHECK_THROWS_AS(helmax::bootstrap_sequence(lp(2), lp(2), 3, 3), std::domain_error);
}

TEST_CASE("maxwell bracket scan", "[exponents]") {
  auto br = helmax::find_maxwell_bracket(lp(6, 5), lp(2), lp(4), 24);
  REQUIRE(br.has_value());
  auto [q1, q2] = *br;
  CHECK(q1 < lp(4));
  CHECK(lp(4) < q2);
  CHECK(helmax::check_maxwell_conditions(lp(6, 5), lp(2), q1).admissible);
  CHECK(helmax::check_maxwell_conditions(lp(6, 5), lp(2), q2).admissible);

  // On a grid so coarse that 1/4 is the only admissible reciprocal, the
  // bracket degenerates to (q, q).
  auto deg = helmax::find_maxwell_bracket(lp(4, 3), lp(2), lp(4), 4);
  REQUIRE(deg.has_value());
  CHECK(deg->first == lp(4));
  CHECK(deg->second == lp(4));

  CHECK_THROWS_AS(helmax::find_maxwell_bracket(lp(2), lp(2), lp(4), 24),
                  helmax::AdmissibilityError);
}

TEST_CASE("checkers agree with the brute-force {k/60} scan", "[exponents][oracle]") {
  const std::int64_t D = 60;
  auto recip = [&](std::int64_t k) { return LebesgueExponent::from_reciprocal(Rational(k, D)); };

  for (int n : {3, 4, 5}) {
    for (std::int64_t a = 0; a <= D; ++a) {
      for (std::int64_t b = 0; b <= D; ++b) {
        const bool gut = helmax::check_gutierrez(recip(a), recip(b), n).admissible;
        REQUIRE(gut == region_oracle::gutierrez(a, b, D, n));
      }
    }
  }
  for (std::int64_t a = 0; a <= D; ++a)
    for (std::int64_t t = 0; t <= D; ++t)
      for (std::int64_t b = 0; b <= D; ++b) {
        const bool mx = helmax::check_maxwell_conditions(recip(a), recip(t), recip(b)).admissible;
        REQUIRE(mx == region_oracle::maxwell(a, t, b, D));
      }
}

TEST_CASE("scaling exponent monotonicity", "[exponents][property]") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> num(0, 60);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3;
    Rational rp(num(rng), 60), rq(num(rng), 60), rq2(num(rng), 60);
    if (rq < rq2) std::swap(rq, rq2);  // rq >= rq2, i.e. q <= q2
    if (rp < rq) continue;             // need p <= q <= q2
    auto p = LebesgueExponent::from_reciprocal(rp);
    auto q = LebesgueExponent::from_reciprocal(rq);
    auto q2 = LebesgueExponent::from_reciprocal(rq2);
    // Antitone in 1/q: larger 1/q gives smaller exponent.
    CHECK(helmax::scaling_exponent(p, q, n) <= helmax::scaling_exponent(p, q2, n));
    // Monotone in 1/p.
    Rational rp2 = rp + Rational(1, 60);
    if (rp2 <= Rational(1)) {
      auto p2 = LebesgueExponent::from_reciprocal(rp2);
      CHECK(helmax::scaling_exponent(p, q, n) <= helmax::scaling_exponent(p2, q, n));
    }
  }
}

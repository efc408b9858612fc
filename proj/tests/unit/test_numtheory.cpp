/*
   Copyright 2026 The dickson authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dickson/error.hpp"
#include "dickson/numtheory.hpp"
#include "oracles.hpp"

using namespace dickson;

TEST(NumTheory, Basics) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65521));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  const Factorization f360{{2, 3}, {3, 2}, {5, 1}};
  EXPECT_EQ(factorize(360), f360);
  EXPECT_EQ(pow_mod(3, 200, 1000003), pow_mod(9, 100, 1000003));
  EXPECT_EQ(pow_mod(5, 0, 7), 1u);
  EXPECT_EQ(v2(48), 4u);
  EXPECT_EQ(v2(7), 0u);
  for (std::uint64_t m = 1; m <= 300; ++m) {
    std::uint64_t phi = 0;
    for (std::uint64_t a = 1; a <= m; ++a) phi += std::gcd(a, m) == 1;
    ASSERT_EQ(euler_phi(m), phi) << m;
  }
  const std::vector<std::uint64_t> xs{4, 6, 10};
  EXPECT_EQ(lcm_list(xs), 60u);
}

TEST(NumTheory, MultOrder) {
  for (std::uint64_t M = 2; M <= 120; ++M) {
    for (std::uint64_t n = 1; n < M; ++n) {
      if (std::gcd(n, M) != 1) {
        EXPECT_THROW(mult_order_mod(n, M), Error);
        continue;
      }
      std::uint64_t k = 1, x = n % M;
      while (x != 1 % M) {
        x = x * n % M;
        ++k;
      }
      ASSERT_EQ(mult_order_mod(n, M), k);
    }
  }
}

TEST(Binomial, LucasMatchesPascal) {
  for (const std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const auto t = oracle::pascal(300, p);
    for (std::uint32_t s = 1; s <= 3; ++s) {
      for (std::uint64_t m = 0; m < 300; ++m) {
        for (std::uint64_t n = 0; n <= m + 2 && n < 300; ++n) {
          const std::uint32_t want = n <= m ? t[m][n] : 0;
          ASSERT_EQ(binom_mod_p(m, n, p, s), want) << p << ' ' << s << ' ' << m << ' ' << n;
        }
      }
    }
  }
}

TEST(Binomial, ExactSmallValues) {
  EXPECT_EQ(binom_exact(10, 3), 120);
  EXPECT_EQ(binom_exact(5, 7), 0);
  EXPECT_EQ(binom_exact(0, 0), 1);
  EXPECT_EQ(binom_exact(60, 30), mpz_class("118264581564861424"));
  EXPECT_THROW(binom_exact(kMaxExactBinomial + 1, 2), Error);
}

TEST(Binomial, LucasMatchesExactRandom) {
  std::mt19937_64 rng(3);
  for (const std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (std::uint32_t s = 1; s <= 3; ++s) {
      for (int t = 0; t < 300; ++t) {
        const std::uint64_t m = rng() % 5000;
        const std::uint64_t n = rng() % (m + 1);
        const mpz_class e = binom_exact(m, n);
        ASSERT_EQ(binom_mod_p(m, n, p, s), mpz_fdiv_ui(e.get_mpz_t(), p));
      }
    }
  }
}

TEST(Binomial, LucasMatchesExactLargeArguments) {
  std::mt19937_64 rng(11);
  for (const std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (std::uint32_t s = 1; s <= 3; ++s) {
      for (int t = 0; t < 8; ++t) {
        const std::uint64_t m = rng() % 1000000;
        const std::uint64_t n = rng() % (m + 1);
        const mpz_class e = binom_exact(m, n);
        ASSERT_EQ(binom_mod_p(m, n, p, s), mpz_fdiv_ui(e.get_mpz_t(), p)) << m << ' ' << n;
      }
    }
  }
}

TEST(FindK, DivisibilityExhaustive) {
  for (std::uint64_t N = 2; N <= 300; ++N) {
    for (std::uint64_t M = 1; M < N; ++M) {
      const std::uint64_t k = find_k(M, N);
      const std::uint64_t g = std::gcd(M + k * (N - 1), N * N - 1);
      ASSERT_EQ((N - 1) % g, 0u) << M << ' ' << N << ' ' << k;
    }
  }
  EXPECT_THROW(find_k(0, 5), Error);
  EXPECT_THROW(find_k(5, 5), Error);
}

TEST(Crt, SolvesAndRejects) {
  EXPECT_EQ(crt2(2, 3, 3, 5), 8u);
  EXPECT_EQ(crt2(1, 4, -1, 6), 5u);
  EXPECT_EQ(crt2(0, 1, 4, 7), 4u);
  EXPECT_THROW(crt2(1, 4, 2, 6), Error);
  for (std::uint64_t m1 = 1; m1 <= 20; ++m1) {
    for (std::uint64_t m2 = 1; m2 <= 20; ++m2) {
      const std::uint64_t l = std::lcm(m1, m2);
      for (std::uint64_t x = 0; x < l; ++x) {
        ASSERT_EQ(crt2(static_cast<std::int64_t>(x % m1), m1, static_cast<std::int64_t>(x % m2),
                       m2),
                  x);
      }
    }
  }
}

TEST(DynStructure, MinimalByBruteForce) {
  for (std::uint64_t M = 1; M <= 200; ++M) {
    for (std::uint64_t n = 0; n < M; ++n) {
      std::vector<std::uint64_t> a(2 * M + 3);
      a[1] = n % M;
      for (std::size_t i = 2; i < a.size(); ++i) a[i] = a[i - 1] * n % M;
      DynStruct want;
      bool found = false;
      for (std::uint64_t l = 0; l <= M && !found; ++l) {
        for (std::uint64_t k = 1; k <= M && !found; ++k) {
          if (a[l + 1] == a[l + 1 + k]) {
            want = DynStruct{l, k};
            found = true;
          }
        }
      }
      ASSERT_TRUE(found);
      ASSERT_EQ(dyn_structure_int(n, M), want) << n << " mod " << M;
    }
  }
}

TEST(UnitGroup, Generators) {
  EXPECT_EQ(unit_group_generator(3, 1), 2u);
  EXPECT_EQ(unit_group_generator(5, 2), 2u);
  EXPECT_EQ(unit_group_generator(7, 1), 3u);
  EXPECT_EQ(unit_group_generator(2, 2), 3u);
  EXPECT_EQ(unit_group_generator(2, 1), 1u);
  EXPECT_THROW(unit_group_generator(2, 3), Error);
  for (const std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      std::uint64_t pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= p;
      EXPECT_EQ(mult_order_mod(unit_group_generator(p, e), pe), euler_phi(pe));
    }
  }
}

TEST(MaxPeriod, ConstructionIsAdmissible) {
  // For every prime power q <= 64 and every divisor m of q - 1, whenever the construction runs
  // its n is a unit modulo q^2 - 1 congruent to 1 modulo m.
  for (std::uint64_t q = 2; q <= 64; ++q) {
    const auto fac = factorize(q);
    if (fac.size() != 1) continue;
    for (std::uint64_t m = 1; m < q; ++m) {
      if ((q - 1) % m != 0) continue;
      // alpha of order m is a square exactly when m divides (q - 1) / 2.
      const bool square = q % 2 == 1 && ((q - 1) / 2) % m == 0;
      {
        const std::uint64_t pi = square ? (q * q - 1) / 2 : q * q - 1;
        std::uint64_t n = 0;
        try {
          n = construct_max_period_n(q, m, pi);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::NoGeneratorFound);
          continue;
        }
        EXPECT_EQ(std::gcd(n, q * q - 1), 1u) << q << ' ' << m << ' ' << pi;
        EXPECT_EQ(n % m, 1 % m);
        EXPECT_GE(max_period_bound(q, m, pi), 1u);
      }
    }
  }
}

TEST(MaxPeriod, SmallExamples) {
  // q = 2, alpha = 1: the generator 2 of (Z/3)^x is squared by the replacement rule.
  EXPECT_EQ(construct_max_period_n(2, 1, 3), 1u);
  EXPECT_EQ(max_period_bound(2, 1, 3), 2u);
  // q = 7, m = 3, pi = 24: odd alpha order with 2-part 8.
  EXPECT_THROW(construct_max_period_n(7, 3, 24), Error);
}

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

#include "dickson/dickson.hpp"
#include "dickson/error.hpp"
#include "oracles.hpp"

using namespace dickson;

namespace {

// D_n by the three-term recurrence over unreduced polynomials.
std::vector<Poly> recurrence(const Field& f, Felt alpha, std::uint64_t last) {
  std::vector<Poly> d{Poly::constant(f, f.from_int(2)), Poly::x(f)};
  for (std::uint64_t n = 2; n <= last; ++n) {
    d.push_back(Poly::x(f) * d[n - 1] - scale(d[n - 2], alpha));
  }
  return d;
}

}  // namespace

TEST(Dickson, IntegerCoefficients) {
  // D_5 = x^5 - 5 a x^3 + 5 a^2 x, D_6 = x^6 - 6 a x^4 + 9 a^2 x^2 - 2 a^3.
  EXPECT_EQ(dickson_coefficient(5, 0), 1);
  EXPECT_EQ(dickson_coefficient(5, 1), 5);
  EXPECT_EQ(dickson_coefficient(5, 2), 5);
  EXPECT_EQ(dickson_coefficient(5, 3), 0);
  EXPECT_EQ(dickson_coefficient(6, 2), 9);
  EXPECT_EQ(dickson_coefficient(6, 3), 2);
  EXPECT_EQ(dickson_coefficient(0, 0), 2);
  for (std::uint64_t n = 0; n < 200; ++n) {
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
      const mpz_class c = dickson_coefficient(n, i);
      for (const std::uint32_t p : {2u, 3u, 5u, 7u}) {
        ASSERT_EQ(dickson_coefficient_mod_p(n, i, p), mpz_fdiv_ui(c.get_mpz_t(), p));
      }
    }
  }
}

TEST(Dickson, ClosedFormMatchesRecurrence) {
  for (const auto q : oracle::small_orders()) {
    const Field f = Field::of_order(q);
    for (const Felt alpha : f.elements()) {
      const auto rec = recurrence(f, alpha, 60);
      for (std::uint64_t n = 0; n <= 60; ++n) {
        ASSERT_EQ(dickson_closed(DicksonId{n, alpha}, f), rec[n]) << q << ' ' << n;
      }
    }
  }
}

TEST(Dickson, ThreeRoutesAgree) {
  for (const auto q : oracle::small_orders()) {
    const Field f = Field::of_order(q);
    const std::uint64_t last = static_cast<std::uint64_t>(q) * q + 3;
    for (const Felt alpha : f.elements()) {
      const auto seq = dickson_sequence(f, alpha, last);
      for (std::uint64_t n = 0; n <= last; ++n) {
        const DicksonId id{n, alpha};
        ASSERT_EQ(seq[n], reduce(dickson_closed(id, f)));
        ASSERT_EQ(seq[n], dickson_reduced(id, f));
        ASSERT_EQ(seq[n], dickson_stride2(id, f));
      }
    }
  }
}

TEST(Dickson, Examples) {
  const Field f3 = Field::of_order(3);
  EXPECT_EQ(to_string(dickson_reduced(DicksonId{2, Felt{1}}, f3)), "x^2 + 1");
  const Field f5 = Field::of_order(5);
  EXPECT_EQ(to_string(dickson_reduced(DicksonId{2, Felt{2}}, f5)), "x^2 + 1");
  EXPECT_EQ(to_string(dickson_reduced(DicksonId{0, Felt{1}}, Field::of_order(7))), "2");
  EXPECT_EQ(dickson_reduced(DicksonId{5, Felt{1}}, f5), RPoly::x(f5));
  EXPECT_EQ(dickson_reduced(DicksonId{7, Felt{1}}, f5), RPoly::x(f5));
}

TEST(Dickson, Degree36OverF8) {
  const Field f = Field::of_order(8);
  for (const Felt a : f.units()) {
    std::vector<Felt> c(8);
    c[7] = f.pow(a, 4);
    c[6] = a;
    c[4] = f.pow(a, 2);
    c[1] = f.one();
    EXPECT_EQ(dickson_reduced(DicksonId{36, a}, f), RPoly(f, c)) << f.format(a);
  }
}

TEST(Dickson, MonomialForZeroAlpha) {
  const Field f = Field::of_order(9);
  for (std::uint64_t n = 1; n < 40; ++n) {
    EXPECT_EQ(dickson_reduced(DicksonId{n, f.zero()}, f), RPoly::monomial(f, f.one(), n));
  }
}

TEST(Dickson, FunctionalEquation) {
  for (const auto q : oracle::small_orders()) {
    const Field f = Field::of_order(q);
    const ExtField e = make_ext(f);
    for (const Felt alpha : f.units()) {
      for (std::uint64_t n = 0; n <= 30; ++n) {
        ASSERT_TRUE(check_functional_eq(DicksonId{n, alpha}, e)) << q << ' ' << n;
      }
    }
  }
  EXPECT_THROW(check_functional_eq(DicksonId{3, Felt{0}}, make_ext(Field::of_order(5))), Error);
}

TEST(Dickson, CompositionIdentity) {
  for (const auto q : oracle::small_orders()) {
    const Field f = Field::of_order(q);
    for (const Felt alpha : f.elements()) {
      for (std::uint64_t m = 0; m <= 7; ++m) {
        for (std::uint64_t n = 0; n <= 7; ++n) {
          ASSERT_TRUE(check_compose_identity(m, n, alpha, f)) << q << ' ' << m << ' ' << n;
        }
      }
    }
  }
}

TEST(Dickson, PermutationCriterion) {
  for (const auto q : oracle::small_orders()) {
    const Field f = Field::of_order(q);
    const std::uint64_t qq = static_cast<std::uint64_t>(q) * q - 1;
    for (const Felt alpha : f.units()) {
      for (std::uint64_t n = 1; n <= 2 * qq; ++n) {
        ASSERT_EQ(is_permutation(DicksonId{n, alpha}, f), std::gcd(n, qq) == 1)
            << q << ' ' << n;
      }
    }
  }
  EXPECT_THROW(is_permutation(DicksonId{3, Felt{0}}, Field::of_order(5)), Error);
}

TEST(Dickson, DegreeLimit) {
  EXPECT_THROW(dickson_closed(DicksonId{kMaxClosedDegree + 1, Felt{1}}, Field::of_order(3)),
               Error);
}

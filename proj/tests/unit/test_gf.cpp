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

#include <set>

#include "dickson/error.hpp"
#include "dickson/gf.hpp"
#include "oracles.hpp"

using namespace dickson;

namespace {

std::vector<std::uint32_t> orders_up_to(std::uint32_t q_max) { return prime_powers_up_to(q_max); }

}  // namespace

TEST(PrimePower, Recognizes) {
  EXPECT_EQ(as_prime_power(9)->p, 3u);
  EXPECT_EQ(as_prime_power(9)->s, 2u);
  EXPECT_EQ(as_prime_power(2)->q, 2u);
  EXPECT_FALSE(as_prime_power(6).has_value());
  EXPECT_FALSE(as_prime_power(1).has_value());
  EXPECT_FALSE(as_prime_power(0).has_value());
  const std::vector<std::uint32_t> expect{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
  EXPECT_EQ(prime_powers_up_to(16), expect);
}

TEST(Field, RejectsBadOrders) {
  EXPECT_THROW(Field::of_order(6), Error);
  try {
    Field::of_order(12);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrimePower);
  }
  EXPECT_THROW(Field(4, 1), Error);
}

TEST(Field, ModulusChoice) {
  const std::vector<std::uint32_t> f4{1, 1, 1}, f8{1, 0, 1, 1}, f9{1, 0, 1}, f16{1, 0, 0, 1, 1};
  EXPECT_EQ(Field::of_order(4).modulus(), f4);
  EXPECT_EQ(Field::of_order(8).modulus(), f8);
  EXPECT_EQ(Field::of_order(9).modulus(), f9);
  EXPECT_EQ(Field::of_order(16).modulus(), f16);
}

TEST(Field, MultiplicationMatchesSchoolbook) {
  for (const auto q : orders_up_to(32)) {
    const Field f = Field::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(f.mul(Felt{a}, Felt{b}).code, oracle::mul(f, a, b)) << q << ' ' << a << ' ' << b;
        ASSERT_EQ(f.add(Felt{a}, Felt{b}).code, oracle::add(f, a, b));
      }
    }
  }
}

TEST(Field, AxiomsExhaustive) {
  for (const auto q : orders_up_to(16)) {
    const Field f = Field::of_order(q);
    const auto el = f.elements();
    for (const Felt a : el) {
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      if (a.code != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      }
      for (const Felt b : el) {
        EXPECT_EQ(f.sub(f.add(a, b), b), a);
        for (const Felt c : el) {
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
}

TEST(Field, GeneratorIsPrimitive) {
  for (const auto q : orders_up_to(256)) {
    const Field f = Field::of_order(q);
    std::set<std::uint32_t> seen;
    Felt x = f.one();
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      seen.insert(x.code);
      x = f.mul(x, f.generator());
    }
    EXPECT_EQ(seen.size(), q - 1) << q;
    EXPECT_EQ(f.mult_order(f.generator()), q - 1);
  }
}

TEST(Field, OrdersAndSquares) {
  for (const auto q : orders_up_to(27)) {
    const Field f = Field::of_order(q);
    std::set<std::uint32_t> squares;
    for (const Felt a : f.units()) squares.insert(f.mul(a, a).code);
    for (const Felt a : f.units()) {
      EXPECT_EQ(f.is_square(a), squares.count(a.code) == 1);
      const auto m = f.mult_order(a);
      EXPECT_EQ((q - 1) % m, 0u);
      EXPECT_EQ(f.pow(a, m), f.one());
      for (std::uint64_t d = 1; d < m; ++d) ASSERT_NE(f.pow(a, d), f.one());
    }
  }
}

TEST(Field, ZeroHandling) {
  const Field f = Field::of_order(9);
  EXPECT_THROW(f.inv(f.zero()), Error);
  EXPECT_THROW(f.mult_order(f.zero()), Error);
  EXPECT_EQ(f.pow(f.zero(), 0), f.one());
  EXPECT_EQ(f.pow(f.zero(), 5), f.zero());
}

TEST(Field, FormatParseRoundTrip) {
  for (const auto q : orders_up_to(81)) {
    const Field f = Field::of_order(q);
    for (const Felt a : f.elements()) ASSERT_EQ(f.parse(f.format(a)), a) << f.format(a);
  }
}

TEST(Field, FormatExamples) {
  const Field f9 = Field::of_order(9);
  EXPECT_EQ(f9.format(f9.from_coeffs(std::vector<std::uint32_t>{1, 1})), "z+1");
  EXPECT_EQ(f9.format(f9.from_coeffs(std::vector<std::uint32_t>{0, 2})), "2z");
  const Field f27 = Field::of_order(27);
  EXPECT_EQ(f27.format(f27.from_coeffs(std::vector<std::uint32_t>{1, 1, 2})), "2z^2+z+1");
  EXPECT_EQ(f27.parse("-1"), f27.from_int(2));
  EXPECT_EQ(f27.parse("2*z^2 + z + 1"), f27.parse("2z^2+z+1"));
  const Field f11 = Field::of_order(11);
  EXPECT_EQ(f11.parse("-1").code, 10u);
  EXPECT_EQ(f11.parse("13").code, 2u);
  EXPECT_THROW(f11.parse("z"), Error);
  EXPECT_THROW(f11.parse("1+"), Error);
}

TEST(ExtField, ModulusHasNoRootInBase) {
  for (const auto q : orders_up_to(32)) {
    const Field f = Field::of_order(q);
    const ExtField e = make_ext(f);
    for (const Felt y : f.elements()) {
      EXPECT_NE(f.mul(y, y), f.add(f.mul(e.t(), y), e.u())) << q;
    }
    std::uint64_t max_order = 0;
    for (const ExtElt u : e.units()) max_order = std::max(max_order, e.mult_order(u));
    EXPECT_EQ(max_order, e.order() - 1);
  }
}

TEST(ExtField, PhiImageCharacterization) {
  // u + alpha/u lies in F_q exactly when u is in F_q^x or u^{q+1} = alpha.
  for (const auto q : orders_up_to(13)) {
    const Field f = Field::of_order(q);
    const ExtField e = make_ext(f);
    for (const Felt alpha : f.units()) {
      for (const ExtElt u : e.units()) {
        const bool in_base = e.in_base(phi_alpha(e, alpha, u));
        const bool expect = e.pow(u, q - 1) == e.one() || e.pow(u, q + 1) == e.embed(alpha);
        ASSERT_EQ(in_base, expect);
        ASSERT_EQ(phi_alpha(e, alpha, u), phi_alpha(e, alpha, e.div(e.embed(alpha), u)));
      }
      std::size_t total = 0, t_alpha = 0;
      for (const Felt beta : f.elements()) {
        const auto pre = phi_preimages(e, alpha, beta);
        for (const ExtElt u : pre) EXPECT_EQ(phi_alpha(e, alpha, u), e.embed(beta));
        total += pre.size();
      }
      for (const ExtElt u : e.units()) t_alpha += e.in_base(phi_alpha(e, alpha, u));
      // Each u in T_alpha is a root for exactly one beta.
      EXPECT_EQ(total, t_alpha);
    }
  }
}

TEST(ExtField, SGammaSizes) {
  for (const auto q : orders_up_to(16)) {
    const Field f = Field::of_order(q);
    const ExtField e = make_ext(f);
    for (const Felt g : f.units()) {
      const auto s = s_gamma(e, g);
      EXPECT_EQ(s.size(), q + 1);
      for (const ExtElt u : s) EXPECT_EQ(e.pow(u, q + 1), e.embed(g));
    }
  }
}

TEST(ExtField, SquareRoots) {
  for (const auto q : std::vector<std::uint32_t>{3, 5, 7, 9, 11, 25}) {
    const Field f = Field::of_order(q);
    const ExtField e = make_ext(f);
    for (const Felt a : f.elements()) {
      const ExtElt r = sqrt_in_ext(e, a);
      EXPECT_EQ(e.mul(r, r), e.embed(a));
    }
  }
  EXPECT_THROW(sqrt_in_ext(make_ext(Field::of_order(8)), Felt{1}), Error);
  EXPECT_THROW(phi_alpha(make_ext(Field::of_order(5)), Felt{1}, ExtElt{}), Error);
}
